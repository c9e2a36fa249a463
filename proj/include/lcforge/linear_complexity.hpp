#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "lcforge/sequence.hpp"
#include "lcforge/simd/kernels.hpp"

namespace lcforge {

/// Linear complexity by the Games-Chan halving algorithm.
///
/// At period length 2^t: when Left == Right continue with Left, otherwise add
/// 2^(t-1) and continue with Left ^ Right; at length 1 add the remaining bit.
std::size_t games_chan_lc(const PeriodicSequence& s);

/// Games-Chan over a caller-owned word buffer holding one period; the buffer
/// is consumed. Used by search loops that keep their own scratch storage.
std::size_t games_chan_in_place(std::span<std::uint64_t> words, int exponent,
                                const simd::KernelTable& kernels);

/// Linear complexity as 2^n minus the multiplicity of the root x = 1 in the
/// period polynomial s^N(x), found by repeated division by (1 + x).
/// Independent of Games-Chan; cost is O(N * multiplicity / 64).
std::size_t lc_by_minimal_polynomial(const PeriodicSequence& s);

/// Closed form for L(E_i + E_j) = 2^n - 2^r, where 2^r exactly divides j - i.
std::size_t lc_pair(std::size_t i, std::size_t j, int exponent);

/// Closed form for the weight-4 sequence with support {i, j, k, l}, where
/// i < j, i < k < l, k - i is odd, i = j mod 2^d and k = l mod 2^e (d, e maximal):
/// 2^n - (1 + 2^d) when d == e, else 2^n - 2^min(d, e).
std::size_t lc_quad(std::size_t i, std::size_t j, std::size_t k, std::size_t l, int exponent);

}  // namespace lcforge
