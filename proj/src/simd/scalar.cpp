#include <algorithm>

#include "backends.hpp"

namespace lcforge::simd {

std::uint32_t lc_word(std::uint64_t s, int exponent) noexcept {
    std::uint32_t lc = 0;
    for (int t = exponent; t >= 1; --t) {
        const unsigned h = 1u << (t - 1);
        const std::uint64_t m = (std::uint64_t{1} << h) - 1;
        const std::uint64_t left = s & m;
        const std::uint64_t right = (s >> h) & m;
        if (left != right) {
            lc += h;
            s = left ^ right;
        } else {
            s = left;
        }
    }
    return lc + static_cast<std::uint32_t>(s & 1);
}

namespace {

void lc_batch_scalar(std::span<const std::uint32_t> periods, int exponent,
                     std::span<std::uint32_t> out) {
    for (std::size_t i = 0; i < periods.size(); ++i) out[i] = lc_word(periods[i], exponent);
}

MinResult min_lc_scalar(std::uint32_t base, std::span<const std::uint32_t> masks, int exponent) {
    MinResult best{lc_word(base ^ masks[0], exponent), 0};
    for (std::size_t i = 1; i < masks.size(); ++i) {
        const std::uint32_t v = lc_word(base ^ masks[i], exponent);
        if (v < best.value) best = {v, i};
    }
    return best;
}

bool fold_scalar(std::span<std::uint64_t> words) {
    const std::size_t h = words.size() / 2;
    const auto left = words.first(h);
    const auto right = words.subspan(h);
    if (std::equal(left.begin(), left.end(), right.begin())) return false;
    for (std::size_t i = 0; i < h; ++i) left[i] ^= right[i];
    return true;
}

}  // namespace

namespace detail {

const KernelTable& scalar_table() noexcept {
    static const KernelTable table{Backend::Scalar, &lc_batch_scalar, &min_lc_scalar, &fold_scalar};
    return table;
}

}  // namespace detail
}  // namespace lcforge::simd
