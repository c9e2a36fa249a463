#pragma once

// Data-parallel Games-Chan kernels.
//
// Every kernel has a portable scalar reference; vector variants (AVX2 on x86-64,
// NEON on aarch64) must produce bit-identical results, including tie-breaking.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lcforge::simd {

enum class Backend { Scalar, Avx2, Neon };

const char* to_string(Backend backend) noexcept;

/// Exponent limit for the 32-bit lane kernels.
inline constexpr int kLaneExponentMax = 5;

struct MinResult {
    std::uint32_t value = 0;
    /// Lowest mask index achieving `value`.
    std::size_t index = 0;

    friend bool operator==(const MinResult&, const MinResult&) = default;
};

struct KernelTable {
    Backend backend;

    /// out[i] = L(periods[i]) for packed periods of 2^exponent <= 32 bits.
    void (*lc_batch)(std::span<const std::uint32_t> periods, int exponent,
                     std::span<std::uint32_t> out);

    /// min over i of L(base ^ masks[i]); `masks` must be non-empty.
    MinResult (*min_lc_over_masks)(std::uint32_t base, std::span<const std::uint32_t> masks,
                                   int exponent);

    /// One Games-Chan step over a multi-word period: if the two halves differ,
    /// the left half becomes Left ^ Right and true is returned; otherwise the
    /// buffer is left as it was and false is returned. words.size() must be even.
    bool (*fold_halves)(std::span<std::uint64_t> words);
};

/// Scalar Games-Chan for a period packed into one word (exponent <= 6).
std::uint32_t lc_word(std::uint64_t period, int exponent) noexcept;

bool backend_available(Backend backend) noexcept;
std::vector<Backend> available_backends();

/// Table for a specific backend; throws std::invalid_argument when unavailable.
const KernelTable& kernels(Backend backend);

/// Fastest available table, chosen once per process from CPU features.
/// LCFORGE_SIMD=scalar|avx2|neon forces a backend when it is available.
const KernelTable& best_kernels();

}  // namespace lcforge::simd
