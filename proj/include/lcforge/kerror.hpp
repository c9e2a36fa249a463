#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcforge/sequence.hpp"
#include "lcforge/simd/kernels.hpp"

namespace lcforge {

/// Positions flipped within one period, strictly increasing.
struct ErrorPattern {
    std::vector<std::size_t> positions;

    std::size_t weight() const noexcept { return positions.size(); }
    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

struct KErrorResult {
    std::size_t k = 0;
    std::size_t value = 0;  ///< L_k(s)
    ErrorPattern witness;   ///< smallest (weight, positions) pattern reaching `value`
};

struct ProfileEntry {
    std::size_t k = 0;
    std::size_t value = 0;

    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Maximum number of error patterns one k-error query may evaluate.
inline constexpr std::uint64_t kSearchBudget = 100'000'000;

/// Patterns evaluated by k_error_lc for a sequence of the given weight parity:
/// the empty pattern plus every pattern of weight <= k whose weight has the same
/// parity as the sequence (the others yield odd total weight, hence L = 2^n).
/// Saturates at UINT64_MAX.
std::uint64_t pruned_search_size(int exponent, std::size_t k, bool odd_weight);

/// Exact k-error linear complexity by exhaustive search with parity pruning.
/// Throws SearchTooLarge when pruned_search_size exceeds kSearchBudget.
KErrorResult k_error_lc(const PeriodicSequence& s, std::size_t k);

/// L_0 .. L_{k_max}; non-increasing.
std::vector<ProfileEntry> k_error_profile(const PeriodicSequence& s, std::size_t k_max);

/// Kurosawa's bound 2^{W_H(2^n - L(s))}: the least k with L_k(s) < L(s).
std::size_t k_min_formula(const PeriodicSequence& s);

/// Least k <= k_cap with L_k(s) < L(s), found by search.
std::size_t k_min_search(const PeriodicSequence& s, std::size_t k_cap);

/// Reusable k-error engine for periods of at most 32 bits (exponent <= 5).
///
/// Pattern masks are built once in (weight, lexicographic) order for both weight
/// parities, so the first mask reaching the minimum is the canonical witness.
/// Instances are immutable and may be shared between threads.
class LaneSearcher {
public:
    LaneSearcher(int exponent, std::size_t k,
                 const simd::KernelTable& kernels = simd::best_kernels());

    int exponent() const noexcept { return exponent_; }
    std::size_t k() const noexcept { return k_; }

    /// L_k of the packed period.
    std::uint32_t value(std::uint32_t period) const;
    KErrorResult search(std::uint32_t period) const;

private:
    simd::MinResult run(std::uint32_t period) const;

    int exponent_;
    std::size_t k_;
    const simd::KernelTable* kernels_;
    // [parity of the period weight] -> masks, each list starting with the empty pattern.
    std::vector<std::uint32_t> masks_[2];
};

}  // namespace lcforge
