#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dilatekit/cmat.hpp>
#include <dilatekit/numkernel.hpp>
#include <dilatekit/errors.hpp>
#include <dilatekit/rng.hpp>

using namespace dilatekit;

namespace {

HermMatrix random_herm(Xoshiro256pp& rng, int n) {
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cx(rng.normal(), rng.normal());
    CMat h = a;
    h += a.adjoint();
    h *= 0.5;
    return HermMatrix(h);
}

HermMatrix random_psd(Xoshiro256pp& rng, int n) {
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cx(rng.normal(), rng.normal());
    return HermMatrix(a.adjoint() * a);
}

double reconstruction_residual(const HermMatrix& a, const EigResult& e) {
    const int n = a.dim();
    CMat lam = CMat::zero(n, n);
    for (int i = 0; i < n; ++i) lam(i, i) = e.eigenvalues[i];
    CMat rec = e.vectors * lam * e.vectors.adjoint();
    rec -= a.mat();
    return sv_norm(rec);
}

HermMatrix pauli_x() {
    CMat m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return HermMatrix(m);
}

HermMatrix pauli_z() {
    return HermMatrix::diag({1.0, -1.0});
}

}  // namespace

TEST_CASE("herm_eig on diagonal and small fixed matrices") {
    auto e = herm_eig(HermMatrix::diag({3.0, 1.0}));
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(3.0));

    auto ex = herm_eig(pauli_x());
    CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(ex.eigenvalues[1] == doctest::Approx(1.0));

    auto ez = herm_eig(HermMatrix::zero(4));
    for (int i = 0; i < 4; ++i) CHECK(ez.eigenvalues[i] == doctest::Approx(0.0));
    CMat dev = ez.vectors.adjoint() * ez.vectors;
    dev -= CMat::identity(4);
    CHECK(dev.max_abs() <= 1e-12);
}

TEST_CASE("herm_eig residual and unitarity on random matrices") {
    Xoshiro256pp rng(42);
    for (int n : {1, 2, 3, 5, 8, 16, 33, 64}) {
        HermMatrix a = random_herm(rng, n);
        auto e = herm_eig(a);
        const double scale = std::max(1.0, op_norm(a));
        CHECK(reconstruction_residual(a, e) <= 1e-10 * scale);
        CMat dev = e.vectors.adjoint() * e.vectors;
        dev -= CMat::identity(n);
        CHECK(sv_norm(dev) <= 1e-10);
        for (int i = 0; i + 1 < n; ++i) CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
    }
}

TEST_CASE("psd_sqrt fixed cases") {
    auto s1 = psd_sqrt(HermMatrix::identity(3));
    CMat d1 = s1.mat();
    d1 -= CMat::identity(3);
    CHECK(d1.max_abs() <= 1e-12);

    auto s2 = psd_sqrt(HermMatrix::diag({4.0, 9.0}));
    CHECK(s2.mat()(0, 0).real() == doctest::Approx(2.0));
    CHECK(s2.mat()(1, 1).real() == doctest::Approx(3.0));

    CMat x = pauli_x().mat();
    CMat ixx = CMat::identity(2);
    ixx -= x * x;
    auto s3 = psd_sqrt(HermMatrix(ixx));
    CHECK(s3.mat().max_abs() <= 1e-8);
}

TEST_CASE("psd_sqrt reconstructs 100 random PSD matrices") {
    Xoshiro256pp rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform() * 64.0);
        HermMatrix a = random_psd(rng, n);
        HermMatrix s = psd_sqrt(a);
        CMat dev = s.mat() * s.mat();
        dev -= a.mat();
        CHECK(sv_norm(dev) <= 1e-8 * std::max(1.0, op_norm(a)));
    }
}

TEST_CASE("psd_sqrt rejects indefinite input") {
    CHECK_THROWS_AS(psd_sqrt(HermMatrix::diag({1.0, -0.5})), NotPSD);
}

TEST_CASE("kron fixed cases") {
    CMat b(2, 2);
    b(0, 0) = 1.0;
    b(0, 1) = 2.0;
    b(1, 0) = 2.0;
    b(1, 1) = -1.0;
    CMat k = CMat::kron(CMat::identity(2), b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == b(0, 1));
    CHECK(k(2, 3) == b(0, 1));
    CHECK(k(0, 2) == cx(0.0));

    CMat x = pauli_x().mat();
    CMat kk = CMat::kron(x, x);
    CHECK(kk(0, 3) == cx(1.0));
    CHECK(kk(1, 2) == cx(1.0));
    CHECK(kk(2, 1) == cx(1.0));
    CHECK(kk(3, 0) == cx(1.0));
    CHECK(kk(0, 0) == cx(0.0));

    CMat kz = CMat::kron(pauli_z().mat(), CMat::identity(2));
    CHECK(kz(0, 0) == cx(1.0));
    CHECK(kz(1, 1) == cx(1.0));
    CHECK(kz(2, 2) == cx(-1.0));
    CHECK(kz(3, 3) == cx(-1.0));
}

TEST_CASE("op_norm fixed and tensor cases") {
    CHECK(op_norm(HermMatrix::diag({-5.0, 2.0})) == doctest::Approx(5.0));
    CHECK(op_norm(HermMatrix::zero(3)) == doctest::Approx(0.0));

    CMat f1 = pauli_x().mat();
    CMat f2 = pauli_z().mat();
    CMat sum = CMat::kron(f1, f1);
    sum += CMat::kron(f2, f2);
    CHECK(op_norm(HermMatrix(sum)) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("op_norm is multiplicative under kron") {
    Xoshiro256pp rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        HermMatrix a = random_herm(rng, 2 + trial % 5);
        HermMatrix b = random_herm(rng, 2 + (trial * 3) % 4);
        const double lhs = op_norm(HermMatrix(CMat::kron(a.mat(), b.mat())));
        const double rhs = op_norm(a) * op_norm(b);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("commutator_norm") {
    CHECK(commutator_norm(HermMatrix::diag({1.0, 2.0}), HermMatrix::diag({3.0, 4.0})) ==
          doctest::Approx(0.0));
    CHECK(commutator_norm(pauli_x(), pauli_z()) == doctest::Approx(2.0));
    Xoshiro256pp rng(5);
    HermMatrix a = random_herm(rng, 6);
    CHECK(commutator_norm(a, a) <= 1e-10);
    HermMatrix b = random_herm(rng, 6);
    CHECK(commutator_norm(a, b) == doctest::Approx(commutator_norm(b, a)));
    CHECK_THROWS_AS(commutator_norm(a, random_herm(rng, 5)), DimensionMismatch);
}

TEST_CASE("direct_sum") {
    MatrixTuple x({HermMatrix::diag({1.0}), HermMatrix::diag({2.0})});
    MatrixTuple y({HermMatrix::diag({3.0}), HermMatrix::diag({4.0})});
    MatrixTuple s = direct_sum({x, y});
    CHECK(s.n() == 2);
    CHECK(s[0].mat()(0, 0) == cx(1.0));
    CHECK(s[0].mat()(1, 1) == cx(3.0));
    CHECK(s[1].mat()(1, 1) == cx(4.0));

    MatrixTuple single = direct_sum({x});
    CHECK(single.n() == 1);
    CHECK(single[1].mat()(0, 0) == cx(2.0));

    MatrixTuple f({pauli_x(), pauli_z()});
    MatrixTuple ff = direct_sum({f, f});
    CHECK(ff.n() == 4);
    for (int j = 0; j < 2; ++j) CHECK(op_norm(ff[j]) == doctest::Approx(1.0));

    MatrixTuple bad({pauli_x()});
    CHECK_THROWS_AS(direct_sum({x, bad}), DimensionMismatch);
}

TEST_CASE("direct_sum norm is max of component norms") {
    Xoshiro256pp rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixTuple s({random_herm(rng, 3), random_herm(rng, 3)});
        MatrixTuple t({random_herm(rng, 4), random_herm(rng, 4)});
        MatrixTuple d = direct_sum({s, t});
        for (int i = 0; i < 2; ++i) {
            const double expect = std::max(op_norm(s[i]), op_norm(t[i]));
            CHECK(std::abs(op_norm(d[i]) - expect) <= 1e-12 * std::max(1.0, expect));
        }
    }
}

TEST_CASE("HermMatrix construction rejects gross asymmetry") {
    CMat m(2, 2);
    m(0, 1) = cx(1.0, 0.0);
    m(1, 0) = cx(0.0, 0.0);
    CHECK_THROWS_AS(HermMatrix{m}, Error);
}
