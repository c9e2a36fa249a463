#include "lcforge/linear_complexity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "lcforge/error.hpp"

namespace lcforge {

std::size_t games_chan_in_place(std::span<std::uint64_t> words, int exponent,
                                const simd::KernelTable& kernels) {
    std::size_t lc = 0;
    while (words.size() > 1) {
        const std::size_t half = words.size() / 2;
        if (kernels.fold_halves(words)) lc += half * 64;
        words = words.first(half);
    }
    return lc + simd::lc_word(words[0], std::min(exponent, 6));
}

std::size_t games_chan_lc(const PeriodicSequence& s) {
    if (s.exponent() <= 6) return simd::lc_word(s.low_word(), s.exponent());
    std::vector<std::uint64_t> scratch(s.words().begin(), s.words().end());
    return games_chan_in_place(scratch, s.exponent(), simd::best_kernels());
}

namespace {

// Quotient of p(x) by (1 + x) over GF(2), assuming p(1) = 0.
// Coefficient b_k of the quotient is the xor of a_j for all j > k.
void divide_by_one_plus_x(std::vector<std::uint64_t>& poly) {
    bool carry = false;  // parity of all higher words
    for (std::size_t w = poly.size(); w-- > 0;) {
        const std::uint64_t a = poly[w];
        std::uint64_t suffix = a;  // bit k: xor of bits k..63 of this word
        suffix ^= suffix >> 1;
        suffix ^= suffix >> 2;
        suffix ^= suffix >> 4;
        suffix ^= suffix >> 8;
        suffix ^= suffix >> 16;
        suffix ^= suffix >> 32;
        if (carry) suffix = ~suffix;
        carry = suffix & 1;
        poly[w] = suffix ^ a;  // exclusive suffix
    }
}

bool has_root_one(const std::vector<std::uint64_t>& poly) {
    unsigned parity = 0;
    for (std::uint64_t w : poly) parity ^= static_cast<unsigned>(std::popcount(w)) & 1u;
    return parity == 0;
}

}  // namespace

std::size_t lc_by_minimal_polynomial(const PeriodicSequence& s) {
    if (s.is_zero()) return 0;
    std::vector<std::uint64_t> poly(s.words().begin(), s.words().end());
    std::size_t multiplicity = 0;
    while (has_root_one(poly)) {
        divide_by_one_plus_x(poly);
        ++multiplicity;
    }
    return s.length() - multiplicity;
}

std::size_t lc_pair(std::size_t i, std::size_t j, int exponent) {
    check_exponent(exponent);
    const std::size_t n = std::size_t{1} << exponent;
    if (i >= j || j >= n) {
        throw Error(ErrorCode::InvalidSupport, "lc_pair needs 0 <= i < j < 2^n");
    }
    return n - (std::size_t{1} << std::countr_zero(j - i));
}

std::size_t lc_quad(std::size_t i, std::size_t j, std::size_t k, std::size_t l, int exponent) {
    check_exponent(exponent);
    const std::size_t n = std::size_t{1} << exponent;
    if (std::max({i, j, k, l}) >= n) {
        throw Error(ErrorCode::InvalidSupport, "lc_quad positions must lie in [0, 2^n)");
    }
    if (std::set<std::size_t>{i, j, k, l}.size() != 4 || !(i < j) || !(i < k && k < l) ||
        (k - i) % 2 == 0) {
        throw Error(ErrorCode::LemmaPreconditionViolated,
                    "lc_quad needs distinct i < j, i < k < l with k - i odd");
    }
    const int d = std::countr_zero(j - i);
    const int e = std::countr_zero(l - k);
    if (d == e) return n - (1 + (std::size_t{1} << d));
    return n - (std::size_t{1} << std::min(d, e));
}

}  // namespace lcforge
