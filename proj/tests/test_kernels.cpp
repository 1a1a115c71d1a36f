#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dilatekit/kernels.hpp>
#include <dilatekit/rng.hpp>

#include <vector>

using dilatekit::kernels::cx;

namespace {

std::vector<cx> random_vec(dilatekit::Xoshiro256pp& rng, std::size_t n) {
    std::vector<cx> v(n);
    for (auto& z : v) z = cx(rng.normal(), rng.normal());
    return v;
}

}  // namespace

TEST_CASE("dispatch reports an implementation") {
    const auto& impl = dilatekit::kernels::active();
    CHECK((impl.name == std::string("scalar") || impl.name == std::string("avx2")));
}

TEST_CASE("scalar and avx2 axpy agree exactly") {
    const auto& scalar = dilatekit::kernels::scalar_impl;
    const auto& avx2 = dilatekit::kernels::avx2_impl;
    dilatekit::Xoshiro256pp rng(12345);
    for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 8u, 33u, 100u}) {
        auto x = random_vec(rng, n);
        auto y1 = random_vec(rng, n);
        auto y2 = y1;
        const cx a(rng.normal(), rng.normal());
        scalar.axpy(a, x.data(), y1.data(), n);
        avx2.axpy(a, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(y1[i].real() == y2[i].real());
            CHECK(y1[i].imag() == y2[i].imag());
        }
        y1 = random_vec(rng, n);
        y2 = y1;
        scalar.axpy_conj(a, x.data(), y1.data(), n);
        avx2.axpy_conj(a, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(y1[i].real() == y2[i].real());
            CHECK(y1[i].imag() == y2[i].imag());
        }
    }
}

TEST_CASE("scalar and avx2 dot products agree to accumulation tolerance") {
    const auto& scalar = dilatekit::kernels::scalar_impl;
    const auto& avx2 = dilatekit::kernels::avx2_impl;
    dilatekit::Xoshiro256pp rng(777);
    for (std::size_t n : {1u, 5u, 8u, 64u, 513u}) {
        auto x = random_vec(rng, n);
        auto y = random_vec(rng, n);
        const cx du_s = scalar.dotu(x.data(), y.data(), n);
        const cx du_v = avx2.dotu(x.data(), y.data(), n);
        CHECK(std::abs(du_s - du_v) <= 1e-13 * (1.0 + std::abs(du_s)));
        const cx dc_s = scalar.dotc(x.data(), y.data(), n);
        const cx dc_v = avx2.dotc(x.data(), y.data(), n);
        CHECK(std::abs(dc_s - dc_v) <= 1e-13 * (1.0 + std::abs(dc_s)));
    }
}

TEST_CASE("dotc conjugates the first argument") {
    std::vector<cx> x{cx(0, 1)};
    std::vector<cx> y{cx(0, 1)};
    const cx r = dilatekit::kernels::dotc(x.data(), y.data(), 1);
    CHECK(r.real() == doctest::Approx(1.0));
    CHECK(r.imag() == doctest::Approx(0.0));
}
