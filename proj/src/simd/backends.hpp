#pragma once

#include "lcforge/simd/kernels.hpp"

namespace lcforge::simd::detail {

const KernelTable& scalar_table() noexcept;
#if defined(LCFORGE_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif
#if defined(LCFORGE_HAVE_NEON)
const KernelTable& neon_table() noexcept;
#endif

}  // namespace lcforge::simd::detail
