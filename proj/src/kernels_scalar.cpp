#include "dilatekit/kernels.hpp"

namespace dilatekit::kernels {

namespace {

void axpy_scalar(cx a, const cx* x, cx* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

void axpy_conj_scalar(cx a, const cx* x, cx* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = -x[i].imag();
        y[i] += cx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

cx dotu_scalar(const cx* x, const cx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

cx dotc_scalar(const cx* x, const cx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

}  // namespace

const Impl scalar_impl = {"scalar", axpy_scalar, axpy_conj_scalar, dotu_scalar, dotc_scalar};

}  // namespace dilatekit::kernels
