#include "dilatekit/kernels.hpp"

#include <immintrin.h>

// Complex doubles are interleaved (re, im), two per 256-bit lane. Products
// are built from mul + addsub (no FMA) so each element sees the same
// floating-point operations as the scalar kernel.
namespace dilatekit::kernels {

namespace {

inline __m256d swap_re_im(__m256d v) { return _mm256_shuffle_pd(v, v, 0b0101); }

void axpy_avx2(cx a, const cx* x, cx* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<double*>(y + i));
        const __m256d t1 = _mm256_mul_pd(ar, xv);
        const __m256d t2 = _mm256_mul_pd(ai, swap_re_im(xv));
        const __m256d prod = _mm256_addsub_pd(t1, t2);
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cx(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
    }
}

void axpy_conj_avx2(cx a, const cx* x, cx* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        xv = _mm256_xor_pd(xv, conj_mask);
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<double*>(y + i));
        const __m256d t1 = _mm256_mul_pd(ar, xv);
        const __m256d t2 = _mm256_mul_pd(ai, swap_re_im(xv));
        const __m256d prod = _mm256_addsub_pd(t1, t2);
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = -x[i].imag();
        y[i] += cx(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
    }
}

cx dotu_avx2(const cx* x, const cx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        const __m256d xr = _mm256_shuffle_pd(xv, xv, 0b0000);
        const __m256d xi = _mm256_shuffle_pd(xv, xv, 0b1111);
        const __m256d t1 = _mm256_mul_pd(xr, yv);
        const __m256d t2 = _mm256_mul_pd(xi, swap_re_im(yv));
        acc = _mm256_add_pd(acc, _mm256_addsub_pd(t1, t2));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

cx dotc_avx2(const cx* x, const cx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        const __m256d xr = _mm256_shuffle_pd(xv, xv, 0b0000);
        const __m256d xi = _mm256_sub_pd(zero, _mm256_shuffle_pd(xv, xv, 0b1111));
        const __m256d t1 = _mm256_mul_pd(xr, yv);
        const __m256d t2 = _mm256_mul_pd(xi, swap_re_im(yv));
        acc = _mm256_add_pd(acc, _mm256_addsub_pd(t1, t2));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

}  // namespace

const Impl avx2_impl = {"avx2", axpy_avx2, axpy_conj_avx2, dotu_avx2, dotc_avx2};

}  // namespace dilatekit::kernels
