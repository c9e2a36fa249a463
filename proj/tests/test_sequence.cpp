#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "lcforge/sequence.hpp"
#include "support/error_code.hpp"

using namespace lcforge;

namespace {

PeriodicSequence seq(int n, std::initializer_list<std::size_t> support) {
    return PeriodicSequence::from_support(n, support);
}

}  // namespace

TEST_CASE("parse_sequence") {
    CHECK(parse_sequence("0000", 2) == PeriodicSequence::zeros(2));
    CHECK(parse_sequence("1100000000000000", 4) == seq(4, {0, 1}));
    CHECK(parse_sequence("C000", 4, Encoding::Hex) == seq(4, {0, 1}));
    CHECK(parse_sequence("C000", 4) == seq(4, {0, 1}));
    CHECK(parse_sequence("c000", 4) == seq(4, {0, 1}));
    // 0x1 in the last digit is the last position.
    CHECK(parse_sequence("0001", 4, Encoding::Hex) == seq(4, {15}));
    CHECK(parse_sequence("1", 0) == seq(0, {0}));

    std::string long_bits(128, '0');
    long_bits[0] = long_bits[64] = long_bits[127] = '1';
    const auto s = parse_sequence(long_bits, 7);
    CHECK(s.support().positions == std::vector<std::size_t>{0, 64, 127});
    CHECK(s.to_binary() == long_bits);
}

TEST_CASE("parse_sequence errors") {
    CHECK(error_code_of([] { parse_sequence("000", 2); }) == ErrorCode::InvalidPeriod);
    CHECK(error_code_of([] { parse_sequence("00000", 2); }) == ErrorCode::InvalidPeriod);
    CHECK(error_code_of([] { parse_sequence("0120", 2); }) == ErrorCode::InvalidDigit);
    CHECK(error_code_of([] { parse_sequence("G000", 4, Encoding::Hex); }) == ErrorCode::InvalidDigit);
    CHECK(error_code_of([] { parse_sequence("00", 2, Encoding::Hex); }) == ErrorCode::InvalidPeriod);
    CHECK(error_code_of([] { parse_sequence("0", 21); }) == ErrorCode::InvalidPeriod);
    CHECK(error_code_of([] { parse_sequence("0", -1); }) == ErrorCode::InvalidPeriod);
}

TEST_CASE("construction errors") {
    CHECK(error_code_of([] { seq(2, {4}); }) == ErrorCode::InvalidSupport);
    CHECK(error_code_of([] { seq(2, {1, 1}); }) == ErrorCode::InvalidSupport);
    CHECK(error_code_of([] { PeriodicSequence::from_word(2, 0x10); }) == ErrorCode::InvalidPeriod);
    CHECK(error_code_of([] { PeriodicSequence::from_words(7, {0}); }) == ErrorCode::InvalidPeriod);
}

TEST_CASE("hamming_weight and classify") {
    CHECK(hamming_weight(PeriodicSequence::zeros(4)) == 0);
    CHECK(hamming_weight(seq(4, {0, 1, 2})) == 3);
    CHECK(hamming_weight(seq(4, {0, 4, 8, 12})) == 4);
    CHECK(classify(seq(4, {0, 1, 2})) == SequenceClass::FullLC);
    CHECK(classify(seq(4, {0, 4, 8, 12})) == SequenceClass::LessLC);
    CHECK(classify(PeriodicSequence::zeros(3)) == SequenceClass::LessLC);
}

TEST_CASE("add") {
    const auto a = seq(4, {3, 7, 9});
    CHECK(add(a, a).is_zero());
    CHECK(add(PeriodicSequence::unit(4, 0), PeriodicSequence::unit(4, 1)) == seq(4, {0, 1}));
    CHECK(add(seq(4, {0, 1}), seq(4, {1, 2})) == seq(4, {0, 2}));
    CHECK(error_code_of([] { add(PeriodicSequence::zeros(3), PeriodicSequence::zeros(4)); }) ==
          ErrorCode::PeriodMismatch);
}

TEST_CASE("phi") {
    CHECK(phi(parse_sequence("1000", 2)) == parse_sequence("10", 1));
    CHECK(phi(parse_sequence("1010", 2)) == parse_sequence("00", 1));
    CHECK(phi(parse_sequence("1101", 2)) == parse_sequence("10", 1));
    CHECK(error_code_of([] { phi(PeriodicSequence::zeros(0)); }) == ErrorCode::CannotHalve);

    // Multi-word halving.
    const auto s = seq(8, {1, 129, 200});
    CHECK(phi(s) == seq(7, {72}));
    CHECK(left_half(s) == seq(7, {1}));
    CHECK(right_half(s) == seq(7, {1, 72}));
}

TEST_CASE("phi weight never grows and keeps parity") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t count = std::uint64_t{1} << (1u << n);
        for (std::uint64_t w = 0; w < count; ++w) {
            const auto s = PeriodicSequence::from_word(n, w);
            const auto p = phi(s);
            CHECK(hamming_weight(p) <= hamming_weight(s));
            if (n >= 2) CHECK(hamming_weight(p) % 2 == hamming_weight(s) % 2);
        }
    }
}

TEST_CASE("every target has 2^(2^n) preimages under phi") {
    for (int n = 0; n <= 2; ++n) {
        std::map<std::uint64_t, std::uint64_t> preimages;
        const std::uint64_t count = std::uint64_t{1} << (2u << n);
        for (std::uint64_t w = 0; w < count; ++w) {
            ++preimages[phi(PeriodicSequence::from_word(n + 1, w)).low_word()];
        }
        const std::uint64_t targets = std::uint64_t{1} << (1u << n);
        CHECK(preimages.size() == targets);
        for (const auto& [target, hits] : preimages) CHECK(hits == targets);
    }
}

TEST_CASE("class names") {
    CHECK(parse_sequence_class("ALL") == SequenceClass::All);
    CHECK(parse_sequence_class("odd") == SequenceClass::FullLC);
    CHECK(parse_sequence_class("LessLC") == SequenceClass::LessLC);
    CHECK(error_code_of([] { parse_sequence_class("balanced"); }) == ErrorCode::InvalidQuery);
}
