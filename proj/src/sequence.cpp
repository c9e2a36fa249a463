#include "lcforge/sequence.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "lcforge/error.hpp"

namespace lcforge {

namespace {

std::uint64_t low_mask(std::size_t bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

int hex_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

const char* to_string(SequenceClass cls) noexcept {
    switch (cls) {
        case SequenceClass::All: return "all";
        case SequenceClass::FullLC: return "full";
        case SequenceClass::LessLC: return "less";
    }
    return "?";
}

SequenceClass parse_sequence_class(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "all") return SequenceClass::All;
    if (lower == "full" || lower == "fulllc" || lower == "odd") return SequenceClass::FullLC;
    if (lower == "less" || lower == "lesslc" || lower == "even") return SequenceClass::LessLC;
    throw Error(ErrorCode::InvalidQuery, "unknown sequence class '" + std::string(text) + "'");
}

std::size_t word_count(int exponent) noexcept {
    return exponent <= 6 ? 1 : std::size_t{1} << (exponent - 6);
}

void check_exponent(int exponent, int max_exponent) {
    if (exponent < 0 || exponent > max_exponent) {
        throw Error(ErrorCode::InvalidPeriod, "exponent " + std::to_string(exponent) +
                                                  " outside [0, " + std::to_string(max_exponent) + "]");
    }
}

PeriodicSequence PeriodicSequence::zeros(int exponent) {
    check_exponent(exponent);
    return PeriodicSequence(exponent, std::vector<std::uint64_t>(word_count(exponent), 0));
}

PeriodicSequence PeriodicSequence::from_support(int exponent,
                                                std::span<const std::size_t> positions) {
    PeriodicSequence s = zeros(exponent);
    const std::size_t n = s.length();
    for (std::size_t p : positions) {
        if (p >= n) {
            throw Error(ErrorCode::InvalidSupport,
                        "position " + std::to_string(p) + " outside period " + std::to_string(n));
        }
        std::uint64_t& w = s.words_[p >> 6];
        const std::uint64_t m = std::uint64_t{1} << (p & 63);
        if (w & m) throw Error(ErrorCode::InvalidSupport, "duplicate position " + std::to_string(p));
        w |= m;
    }
    return s;
}

PeriodicSequence PeriodicSequence::from_support(int exponent,
                                                std::initializer_list<std::size_t> positions) {
    return from_support(exponent, std::span<const std::size_t>(positions.begin(), positions.size()));
}

PeriodicSequence PeriodicSequence::from_word(int exponent, std::uint64_t word) {
    check_exponent(exponent, 6);
    if (word & ~low_mask(std::size_t{1} << exponent)) {
        throw Error(ErrorCode::InvalidPeriod, "word has bits beyond the period");
    }
    return PeriodicSequence(exponent, {word});
}

PeriodicSequence PeriodicSequence::from_words(int exponent, std::vector<std::uint64_t> words) {
    check_exponent(exponent);
    if (words.size() != word_count(exponent)) {
        throw Error(ErrorCode::InvalidPeriod, "word count does not match exponent");
    }
    if (exponent < 6 && (words[0] & ~low_mask(std::size_t{1} << exponent))) {
        throw Error(ErrorCode::InvalidPeriod, "word has bits beyond the period");
    }
    return PeriodicSequence(exponent, std::move(words));
}

PeriodicSequence PeriodicSequence::unit(int exponent, std::size_t position) {
    return from_support(exponent, {position});
}

bool PeriodicSequence::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

SupportSet PeriodicSequence::support() const {
    SupportSet out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.positions.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string PeriodicSequence::to_binary() const {
    std::string out(length(), '0');
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (bit(i)) out[i] = '1';
    }
    return out;
}

PeriodicSequence parse_sequence(std::string_view text, int exponent, Encoding encoding) {
    check_exponent(exponent);
    const std::size_t n = std::size_t{1} << exponent;
    if (encoding == Encoding::Auto) {
        if (text.size() == n) {
            encoding = Encoding::Binary;
        } else if (exponent >= 2 && text.size() == n / 4) {
            encoding = Encoding::Hex;
        } else {
            throw Error(ErrorCode::InvalidPeriod, "length " + std::to_string(text.size()) +
                                                      " is neither 2^n nor 2^n/4 for n=" +
                                                      std::to_string(exponent));
        }
    }

    std::vector<std::uint64_t> words(word_count(exponent), 0);
    if (encoding == Encoding::Binary) {
        if (text.size() != n) {
            throw Error(ErrorCode::InvalidPeriod, "binary period must have " + std::to_string(n) +
                                                      " digits, got " + std::to_string(text.size()));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const char c = text[i];
            if (c != '0' && c != '1') {
                throw Error(ErrorCode::InvalidDigit, std::string("non-binary character '") + c + "'");
            }
            if (c == '1') words[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    } else {
        if (exponent < 2 || text.size() != n / 4) {
            throw Error(ErrorCode::InvalidPeriod, "hex period must have 2^n/4 digits with n >= 2");
        }
        for (std::size_t d = 0; d < text.size(); ++d) {
            const int v = hex_value(text[d]);
            if (v < 0) {
                throw Error(ErrorCode::InvalidDigit, std::string("non-hex character '") + text[d] + "'");
            }
            for (int b = 0; b < 4; ++b) {
                if ((v >> (3 - b)) & 1) {
                    const std::size_t i = 4 * d + static_cast<std::size_t>(b);
                    words[i >> 6] |= std::uint64_t{1} << (i & 63);
                }
            }
        }
    }
    return PeriodicSequence::from_words(exponent, std::move(words));
}

std::size_t hamming_weight(const PeriodicSequence& s) noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : s.words()) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

SequenceClass classify(const PeriodicSequence& s) noexcept {
    return hamming_weight(s) % 2 ? SequenceClass::FullLC : SequenceClass::LessLC;
}

PeriodicSequence add(const PeriodicSequence& a, const PeriodicSequence& b) {
    if (a.exponent() != b.exponent()) {
        throw Error(ErrorCode::PeriodMismatch, "exponents " + std::to_string(a.exponent()) + " and " +
                                                   std::to_string(b.exponent()));
    }
    std::vector<std::uint64_t> words(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= b.words()[i];
    return PeriodicSequence::from_words(a.exponent(), std::move(words));
}

namespace {

PeriodicSequence half(const PeriodicSequence& s, bool right) {
    if (s.exponent() == 0) throw Error(ErrorCode::CannotHalve, "period 1 has no halves");
    const int child = s.exponent() - 1;
    const auto words = s.words();
    if (s.exponent() <= 6) {
        const std::size_t h = std::size_t{1} << child;
        const std::uint64_t w = right ? words[0] >> h : words[0];
        return PeriodicSequence::from_word(child, w & low_mask(h));
    }
    const std::size_t hw = words.size() / 2;
    const auto first = words.begin() + (right ? static_cast<std::ptrdiff_t>(hw) : 0);
    return PeriodicSequence::from_words(child, std::vector<std::uint64_t>(first, first + static_cast<std::ptrdiff_t>(hw)));
}

}  // namespace

PeriodicSequence left_half(const PeriodicSequence& s) { return half(s, false); }
PeriodicSequence right_half(const PeriodicSequence& s) { return half(s, true); }

PeriodicSequence phi(const PeriodicSequence& s) { return add(left_half(s), right_half(s)); }

}  // namespace lcforge
