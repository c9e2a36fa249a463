#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcforge {

/// Largest exponent accepted for single-sequence operations (period 2^20).
inline constexpr int kMaxExponent = 20;
/// Largest exponent accepted by census-grade operations.
inline constexpr int kMaxCensusExponent = 5;

/// Sorted, duplicate-free positions within one period.
struct SupportSet {
    std::vector<std::size_t> positions;

    std::size_t size() const noexcept { return positions.size(); }
    friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// Parity class of a 2^n-periodic sequence. Odd weight is exactly the class with
/// linear complexity 2^n; even weight is the class with linear complexity below 2^n.
enum class SequenceClass { All, FullLC, LessLC };

const char* to_string(SequenceClass cls) noexcept;
SequenceClass parse_sequence_class(std::string_view text);

/// One period of a binary sequence with period 2^n.
///
/// Bits are packed into 64-bit words, position 0 in the least significant bit of
/// word 0. Periods shorter than 64 bits occupy the low bits of a single word and
/// the unused high bits are always zero. Instances are immutable.
class PeriodicSequence {
public:
    static PeriodicSequence zeros(int exponent);
    static PeriodicSequence from_support(int exponent, std::span<const std::size_t> positions);
    static PeriodicSequence from_support(int exponent, std::initializer_list<std::size_t> positions);
    /// Period of up to 64 bits given as a packed word; bits above 2^n must be zero.
    static PeriodicSequence from_word(int exponent, std::uint64_t word);
    static PeriodicSequence from_words(int exponent, std::vector<std::uint64_t> words);
    /// Unit sequence E_i: a single 1 at position i.
    static PeriodicSequence unit(int exponent, std::size_t position);

    int exponent() const noexcept { return exponent_; }
    std::size_t length() const noexcept { return std::size_t{1} << exponent_; }
    bool bit(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    /// Packed period for exponent <= 6.
    std::uint64_t low_word() const noexcept { return words_[0]; }
    bool is_zero() const noexcept;

    SupportSet support() const;
    std::string to_binary() const;

    friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

private:
    PeriodicSequence(int exponent, std::vector<std::uint64_t> words)
        : exponent_(exponent), words_(std::move(words)) {}

    int exponent_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class Encoding { Auto, Binary, Hex };

/// Parses one period. Binary text lists position 0 first; hex text is decoded
/// most-significant-bit first, so the leading hex digit holds positions 0..3.
/// Auto picks binary when the length is 2^n and hex when it is 2^n / 4.
PeriodicSequence parse_sequence(std::string_view text, int exponent,
                                Encoding encoding = Encoding::Auto);

/// Number of 64-bit words used to store a period of 2^exponent bits.
std::size_t word_count(int exponent) noexcept;

void check_exponent(int exponent, int max_exponent = kMaxExponent);

std::size_t hamming_weight(const PeriodicSequence& s) noexcept;
SequenceClass classify(const PeriodicSequence& s) noexcept;
PeriodicSequence add(const PeriodicSequence& a, const PeriodicSequence& b);

/// Left(s) + Right(s): the half-period sequence with bit i = s_i xor s_{i + 2^(n-1)}.
PeriodicSequence phi(const PeriodicSequence& s);
PeriodicSequence left_half(const PeriodicSequence& s);
PeriodicSequence right_half(const PeriodicSequence& s);

}  // namespace lcforge
