#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "backends.hpp"

namespace lcforge::simd {

const char* to_string(Backend backend) noexcept {
    switch (backend) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend backend) noexcept {
    switch (backend) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(LCFORGE_HAVE_AVX2)
            __builtin_cpu_init();
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(LCFORGE_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
        if (backend_available(b)) out.push_back(b);
    }
    return out;
}

const KernelTable& kernels(Backend backend) {
    if (!backend_available(backend)) {
        throw std::invalid_argument(std::string("SIMD backend unavailable: ") + to_string(backend));
    }
    switch (backend) {
#if defined(LCFORGE_HAVE_AVX2)
        case Backend::Avx2: return detail::avx2_table();
#endif
#if defined(LCFORGE_HAVE_NEON)
        case Backend::Neon: return detail::neon_table();
#endif
        default: return detail::scalar_table();
    }
}

namespace {

const KernelTable& select_best() {
    if (const char* forced = std::getenv("LCFORGE_SIMD")) {
        const std::string_view name(forced);
        for (Backend b : available_backends()) {
            if (name == to_string(b)) return kernels(b);
        }
    }
    if (backend_available(Backend::Avx2)) return kernels(Backend::Avx2);
    if (backend_available(Backend::Neon)) return kernels(Backend::Neon);
    return kernels(Backend::Scalar);
}

}  // namespace

const KernelTable& best_kernels() {
    static const KernelTable& table = select_best();
    return table;
}

}  // namespace lcforge::simd
