// aarch64 only; NEON is part of the base ISA there.
#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "backends.hpp"

namespace lcforge::simd {
namespace {

inline uint32x4_t lc4(uint32x4_t s, int exponent) {
    uint32x4_t lc = vdupq_n_u32(0);
    for (int t = exponent; t >= 1; --t) {
        const int h = 1 << (t - 1);
        const uint32x4_t m = vdupq_n_u32((1u << h) - 1);
        const uint32x4_t left = vandq_u32(s, m);
        const uint32x4_t right = vandq_u32(vshlq_u32(s, vdupq_n_s32(-h)), m);
        const uint32x4_t differ = vmvnq_u32(vceqq_u32(veorq_u32(left, right), vdupq_n_u32(0)));
        lc = vaddq_u32(lc, vandq_u32(differ, vdupq_n_u32(static_cast<std::uint32_t>(h))));
        s = veorq_u32(left, vandq_u32(right, differ));
    }
    return vaddq_u32(lc, vandq_u32(s, vdupq_n_u32(1)));
}

void lc_batch_neon(std::span<const std::uint32_t> periods, int exponent,
                   std::span<std::uint32_t> out) {
    const std::size_t body = periods.size() / 4 * 4;
    for (std::size_t i = 0; i < body; i += 4) {
        vst1q_u32(out.data() + i, lc4(vld1q_u32(periods.data() + i), exponent));
    }
    for (std::size_t i = body; i < periods.size(); ++i) out[i] = lc_word(periods[i], exponent);
}

MinResult min_lc_neon(std::uint32_t base, std::span<const std::uint32_t> masks, int exponent) {
    const std::size_t body = masks.size() / 4 * 4;
    MinResult best{std::numeric_limits<std::uint32_t>::max(), 0};
    if (body > 0) {
        const uint32x4_t vbase = vdupq_n_u32(base);
        uint32x4_t vmin = vdupq_n_u32(std::numeric_limits<std::uint32_t>::max());
        uint32x4_t vidx = vdupq_n_u32(0);
        const std::uint32_t first[4] = {0, 1, 2, 3};
        uint32x4_t idx = vld1q_u32(first);
        for (std::size_t i = 0; i < body; i += 4) {
            const uint32x4_t lc = lc4(veorq_u32(vld1q_u32(masks.data() + i), vbase), exponent);
            const uint32x4_t lt = vcltq_u32(lc, vmin);
            vmin = vbslq_u32(lt, lc, vmin);
            vidx = vbslq_u32(lt, idx, vidx);
            idx = vaddq_u32(idx, vdupq_n_u32(4));
        }
        std::uint32_t mins[4];
        std::uint32_t idxs[4];
        vst1q_u32(mins, vmin);
        vst1q_u32(idxs, vidx);
        for (int lane = 0; lane < 4; ++lane) {
            if (mins[lane] < best.value || (mins[lane] == best.value && idxs[lane] < best.index)) {
                best = {mins[lane], idxs[lane]};
            }
        }
    }
    for (std::size_t i = body; i < masks.size(); ++i) {
        const std::uint32_t v = lc_word(base ^ masks[i], exponent);
        if (v < best.value) best = {v, i};
    }
    return best;
}

bool fold_neon(std::span<std::uint64_t> words) {
    const std::size_t h = words.size() / 2;
    std::uint64_t* left = words.data();
    const std::uint64_t* right = words.data() + h;
    const std::size_t body = h / 2 * 2;
    uint64x2_t acc = vdupq_n_u64(0);
    for (std::size_t i = 0; i < body; i += 2) {
        const uint64x2_t x = veorq_u64(vld1q_u64(left + i), vld1q_u64(right + i));
        acc = vorrq_u64(acc, x);
        vst1q_u64(left + i, x);
    }
    std::uint64_t any = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (std::size_t i = body; i < h; ++i) {
        left[i] ^= right[i];
        any |= left[i];
    }
    if (any == 0) {
        std::copy(right, right + h, left);
        return false;
    }
    return true;
}

}  // namespace

namespace detail {

const KernelTable& neon_table() noexcept {
    static const KernelTable table{Backend::Neon, &lc_batch_neon, &min_lc_neon, &fold_neon};
    return table;
}

}  // namespace detail
}  // namespace lcforge::simd
