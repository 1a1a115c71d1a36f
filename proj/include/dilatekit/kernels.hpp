#pragma once

#include <complex>
#include <cstddef>

// Low-level complex vector kernels. A scalar reference implementation and an
// AVX2 variant compile side by side; the active one is picked at runtime from
// CPUID (override with DILATEKIT_FORCE_SCALAR=1). The AVX2 path uses plain
// mul/addsub so scalar and vector results agree operation-for-operation.
namespace dilatekit::kernels {

using cx = std::complex<double>;

struct Impl {
    const char* name;
    // y[i] += a * x[i]
    void (*axpy)(cx a, const cx* x, cx* y, std::size_t n);
    // y[i] += a * conj(x[i])
    void (*axpy_conj)(cx a, const cx* x, cx* y, std::size_t n);
    // sum x[i] * y[i]
    cx (*dotu)(const cx* x, const cx* y, std::size_t n);
    // sum conj(x[i]) * y[i]
    cx (*dotc)(const cx* x, const cx* y, std::size_t n);
};

extern const Impl scalar_impl;
extern const Impl avx2_impl;

// Dispatched entry points.
const Impl& active();

inline void axpy(cx a, const cx* x, cx* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void axpy_conj(cx a, const cx* x, cx* y, std::size_t n) { active().axpy_conj(a, x, y, n); }
inline cx dotu(const cx* x, const cx* y, std::size_t n) { return active().dotu(x, y, n); }
inline cx dotc(const cx* x, const cx* y, std::size_t n) { return active().dotc(x, y, n); }

}  // namespace dilatekit::kernels
