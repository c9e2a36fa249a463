#include "lcforge/kerror.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "lcforge/error.hpp"
#include "lcforge/linear_complexity.hpp"

namespace lcforge {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
// Masks per kernel call; bounds the work done after the minimum reaches 0.
constexpr std::size_t kChunk = 1024;
// Above this many masks per parity a one-off query is cheaper without the mask tables.
constexpr std::uint64_t kLaneTableLimit = std::uint64_t{1} << 20;

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(c);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

// Visits weight-w position lists of [0, n) in lexicographic order until visit returns false.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t w, Visit&& visit) {
    if (w > n) return true;
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) pos[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(pos))) return false;
        std::size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + (i - 1)) --i;
        if (i == 0) return true;
        ++pos[i - 1];
        for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
}

void check_k(int exponent, std::size_t k) {
    if (k > (std::size_t{1} << exponent)) {
        throw Error(ErrorCode::InvalidParams, "k = " + std::to_string(k) + " exceeds the period");
    }
}

void check_budget(int exponent, std::size_t k, bool odd_weight) {
    const std::uint64_t size = pruned_search_size(exponent, k, odd_weight);
    if (size > kSearchBudget) throw SearchTooLarge(size);
}

ErrorPattern pattern_from_mask(std::uint32_t mask) {
    ErrorPattern out;
    while (mask) {
        out.positions.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

KErrorResult search_words(const PeriodicSequence& s, std::size_t k) {
    const bool odd = hamming_weight(s) % 2 == 1;
    const std::size_t n = s.length();
    const auto& kernels = simd::best_kernels();

    std::vector<std::uint64_t> patterned(s.words().begin(), s.words().end());
    std::vector<std::uint64_t> scratch(patterned.size());
    auto lc_of_patterned = [&] {
        std::copy(patterned.begin(), patterned.end(), scratch.begin());
        return games_chan_in_place(scratch, s.exponent(), kernels);
    };
    auto flip = [&](const std::vector<std::size_t>& pos) {
        for (std::size_t p : pos) patterned[p >> 6] ^= std::uint64_t{1} << (p & 63);
    };

    KErrorResult best{k, lc_of_patterned(), {}};
    for (std::size_t w = odd ? 1 : 2; w <= k && best.value > 0; w += 2) {
        for_each_combination(n, w, [&](const std::vector<std::size_t>& pos) {
            flip(pos);
            const std::size_t v = lc_of_patterned();
            flip(pos);
            if (v < best.value) {
                best.value = v;
                best.witness.positions = pos;
            }
            return best.value > 0;
        });
    }
    return best;
}

}  // namespace

std::uint64_t pruned_search_size(int exponent, std::size_t k, bool odd_weight) {
    const std::uint64_t n = std::uint64_t{1} << exponent;
    std::uint64_t total = 1;
    for (std::size_t w = odd_weight ? 1 : 2; w <= k; w += 2) {
        total = saturating_add(total, saturating_binomial(n, w));
    }
    return total;
}

LaneSearcher::LaneSearcher(int exponent, std::size_t k, const simd::KernelTable& kernels)
    : exponent_(exponent), k_(k), kernels_(&kernels) {
    check_exponent(exponent, simd::kLaneExponentMax);
    check_k(exponent, k);
    check_budget(exponent, k, false);
    check_budget(exponent, k, true);
    const std::size_t n = std::size_t{1} << exponent;
    for (int parity = 0; parity < 2; ++parity) {
        auto& masks = masks_[parity];
        masks.push_back(0);
        for (std::size_t w = parity ? 1 : 2; w <= k; w += 2) {
            for_each_combination(n, w, [&](const std::vector<std::size_t>& pos) {
                std::uint32_t m = 0;
                for (std::size_t p : pos) m |= std::uint32_t{1} << p;
                masks.push_back(m);
                return true;
            });
        }
    }
}

simd::MinResult LaneSearcher::run(std::uint32_t period) const {
    const auto& masks = masks_[std::popcount(period) & 1];
    simd::MinResult best{std::numeric_limits<std::uint32_t>::max(), 0};
    for (std::size_t begin = 0; begin < masks.size() && best.value > 0; begin += kChunk) {
        const std::size_t len = std::min(kChunk, masks.size() - begin);
        const auto r = kernels_->min_lc_over_masks(
            period, std::span<const std::uint32_t>(masks).subspan(begin, len), exponent_);
        if (r.value < best.value) best = {r.value, begin + r.index};
    }
    return best;
}

std::uint32_t LaneSearcher::value(std::uint32_t period) const { return run(period).value; }

KErrorResult LaneSearcher::search(std::uint32_t period) const {
    const auto r = run(period);
    const auto& masks = masks_[std::popcount(period) & 1];
    return {k_, r.value, pattern_from_mask(masks[r.index])};
}

KErrorResult k_error_lc(const PeriodicSequence& s, std::size_t k) {
    check_k(s.exponent(), k);
    const bool odd = hamming_weight(s) % 2 == 1;
    check_budget(s.exponent(), k, odd);
    if (s.exponent() <= simd::kLaneExponentMax &&
        pruned_search_size(s.exponent(), k, !odd) <= kLaneTableLimit &&
        pruned_search_size(s.exponent(), k, odd) <= kLaneTableLimit) {
        return LaneSearcher(s.exponent(), k).search(static_cast<std::uint32_t>(s.low_word()));
    }
    return search_words(s, k);
}

std::vector<ProfileEntry> k_error_profile(const PeriodicSequence& s, std::size_t k_max) {
    check_k(s.exponent(), k_max);
    std::vector<ProfileEntry> out;
    out.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        // L_k is non-increasing and bounded below by 0, so search stops once 0 is reached.
        if (!out.empty() && out.back().value == 0) {
            out.push_back({k, 0});
        } else {
            out.push_back({k, k_error_lc(s, k).value});
        }
    }
    return out;
}

std::size_t k_min_formula(const PeriodicSequence& s) {
    if (s.is_zero()) {
        throw Error(ErrorCode::UndefinedForZeroSequence, "k_min needs a nonzero sequence");
    }
    const std::size_t gap = s.length() - games_chan_lc(s);
    return std::size_t{1} << std::popcount(gap);
}

std::size_t k_min_search(const PeriodicSequence& s, std::size_t k_cap) {
    if (s.is_zero()) {
        throw Error(ErrorCode::UndefinedForZeroSequence, "k_min needs a nonzero sequence");
    }
    const std::size_t lc = games_chan_lc(s);
    const std::size_t cap = std::min(k_cap, s.length());
    for (std::size_t k = 1; k <= cap; ++k) {
        if (k_error_lc(s, k).value < lc) return k;
    }
    throw Error(ErrorCode::NotFoundWithinCap,
                "no k <= " + std::to_string(k_cap) + " lowers the linear complexity");
}

}  // namespace lcforge
