#include "dilatekit/kernels.hpp"

#include <cstdlib>

namespace dilatekit::kernels {

namespace {

const Impl& pick() {
    const char* force = std::getenv("DILATEKIT_FORCE_SCALAR");
    if (force != nullptr && force[0] == '1') return scalar_impl;
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return avx2_impl;
#endif
    return scalar_impl;
}

}  // namespace

const Impl& active() {
    static const Impl& impl = pick();
    return impl;
}

}  // namespace dilatekit::kernels
