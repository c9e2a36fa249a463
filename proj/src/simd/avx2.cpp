// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "backends.hpp"

namespace lcforge::simd {
namespace {

// Games-Chan on eight 32-bit periods at once. Branch-free form of the scalar
// step: L += h when the halves differ, s <- Left ^ (Right & differ).
inline __m256i lc8(__m256i s, int exponent) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi32(-1);
    __m256i lc = zero;
    for (int t = exponent; t >= 1; --t) {
        const int h = 1 << (t - 1);
        const __m256i m = _mm256_set1_epi32(static_cast<int>((1u << h) - 1));
        const __m256i left = _mm256_and_si256(s, m);
        const __m256i right = _mm256_and_si256(_mm256_srl_epi32(s, _mm_cvtsi32_si128(h)), m);
        const __m256i differ =
            _mm256_xor_si256(_mm256_cmpeq_epi32(_mm256_xor_si256(left, right), zero), ones);
        lc = _mm256_add_epi32(lc, _mm256_and_si256(differ, _mm256_set1_epi32(h)));
        s = _mm256_xor_si256(left, _mm256_and_si256(right, differ));
    }
    return _mm256_add_epi32(lc, _mm256_and_si256(s, _mm256_set1_epi32(1)));
}

void lc_batch_avx2(std::span<const std::uint32_t> periods, int exponent,
                   std::span<std::uint32_t> out) {
    const std::size_t body = periods.size() / 8 * 8;
    for (std::size_t i = 0; i < body; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(periods.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), lc8(v, exponent));
    }
    for (std::size_t i = body; i < periods.size(); ++i) out[i] = lc_word(periods[i], exponent);
}

MinResult min_lc_avx2(std::uint32_t base, std::span<const std::uint32_t> masks, int exponent) {
    const std::size_t body = masks.size() / 8 * 8;
    MinResult best{std::numeric_limits<std::uint32_t>::max(), 0};

    if (body > 0) {
        const __m256i vbase = _mm256_set1_epi32(static_cast<int>(base));
        const __m256i step = _mm256_set1_epi32(8);
        __m256i vmin = _mm256_set1_epi32(std::numeric_limits<std::int32_t>::max());
        __m256i vidx = _mm256_setzero_si256();
        __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
        for (std::size_t i = 0; i < body; i += 8) {
            const __m256i v = _mm256_xor_si256(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i)), vbase);
            const __m256i lc = lc8(v, exponent);
            // Strict less-than keeps the earliest index within each lane.
            const __m256i lt = _mm256_cmpgt_epi32(vmin, lc);
            vmin = _mm256_blendv_epi8(vmin, lc, lt);
            vidx = _mm256_blendv_epi8(vidx, idx, lt);
            idx = _mm256_add_epi32(idx, step);
        }
        alignas(32) std::int32_t mins[8];
        alignas(32) std::int32_t idxs[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(mins), vmin);
        _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), vidx);
        for (int lane = 0; lane < 8; ++lane) {
            const auto v = static_cast<std::uint32_t>(mins[lane]);
            const auto at = static_cast<std::size_t>(idxs[lane]);
            if (v < best.value || (v == best.value && at < best.index)) best = {v, at};
        }
    }
    for (std::size_t i = body; i < masks.size(); ++i) {
        const std::uint32_t v = lc_word(base ^ masks[i], exponent);
        if (v < best.value) best = {v, i};
    }
    return best;
}

bool fold_avx2(std::span<std::uint64_t> words) {
    const std::size_t h = words.size() / 2;
    std::uint64_t* left = words.data();
    const std::uint64_t* right = words.data() + h;
    const std::size_t body = h / 4 * 4;
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(left + i));
        const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right + i));
        const __m256i x = _mm256_xor_si256(l, r);
        acc = _mm256_or_si256(acc, x);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(left + i), x);
    }
    std::uint64_t tail = 0;
    for (std::size_t i = body; i < h; ++i) {
        left[i] ^= right[i];
        tail |= left[i];
    }
    if (_mm256_testz_si256(acc, acc) && tail == 0) {
        // Halves were equal and the left half is now zero; restore it.
        std::copy(right, right + h, left);
        return false;
    }
    return true;
}

}  // namespace

namespace detail {

const KernelTable& avx2_table() noexcept {
    static const KernelTable table{Backend::Avx2, &lc_batch_avx2, &min_lc_avx2, &fold_avx2};
    return table;
}

}  // namespace detail
}  // namespace lcforge::simd
