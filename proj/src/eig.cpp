#include <algorithm>
#include <cmath>
#include <numeric>

#include "dilatekit/kernels.hpp"
#include "dilatekit/numkernel.hpp"

// Hermitian eigensolver: Householder reduction to a real symmetric
// tridiagonal matrix (with a diagonal phase correction to make the
// subdiagonal real), then implicit-shift QL iteration.
namespace dilatekit {

namespace {

constexpr int kMaxQLIterations = 50;

double sign_like(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

struct Tridiag {
    Vec diag;
    Vec sub;  // length n-1, real nonnegative
    CMat q;   // accumulated unitary (empty if vectors not wanted)
};

Tridiag tridiagonalize(CMat a, bool want_vectors) {
    const int n = a.rows();
    Tridiag t;
    t.diag.resize(n);
    t.sub.assign(std::max(n - 1, 0), 0.0);
    std::vector<cx> sub_c(std::max(n - 1, 0), cx(0.0, 0.0));
    Vec taus(std::max(n - 2, 0), 0.0);
    // Householder vectors live in the eliminated part of column k.
    std::vector<cx> p(n), w(n), wk(n);

    for (int k = 0; k < n - 2; ++k) {
        const int m = n - k - 1;
        double xnorm2 = 0.0;
        for (int i = 0; i < m; ++i) xnorm2 += std::norm(a(k + 1 + i, k));
        const double xnorm = std::sqrt(xnorm2);
        const cx x0 = a(k + 1, k);
        if (xnorm < 1e-300) {
            sub_c[k] = x0;
            continue;
        }
        const cx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cx(1.0, 0.0);
        const cx alpha = -phase * xnorm;
        // v = x - alpha e1, stored back into column k
        a(k + 1, k) = x0 - alpha;
        double vnorm2 = 0.0;
        for (int i = 0; i < m; ++i) vnorm2 += std::norm(a(k + 1 + i, k));
        if (vnorm2 < 1e-300) {
            sub_c[k] = alpha;
            a(k + 1, k) = x0;
            continue;
        }
        const double tau = 2.0 / vnorm2;
        taus[k] = tau;
        sub_c[k] = alpha;

        // Contiguous copy of v (it lives in a strided column of a).
        for (int i = 0; i < m; ++i) wk[i] = a(k + 1 + i, k);

        // Two-sided update of B = A[k+1.., k+1..]: B -= v w* + w v*,
        // w = tau*B v - (tau^2/2)(v* B v) v.
        for (int i = 0; i < m; ++i) {
            const cx* row = a.row_ptr(k + 1 + i) + (k + 1);
            p[i] = tau * kernels::dotu(row, wk.data(), static_cast<std::size_t>(m));
        }
        const cx vp = kernels::dotc(wk.data(), p.data(), static_cast<std::size_t>(m));
        const cx kappa = 0.5 * tau * vp;
        for (int i = 0; i < m; ++i) w[i] = p[i] - kappa * wk[i];
        for (int i = 0; i < m; ++i) {
            cx* row = a.row_ptr(k + 1 + i) + (k + 1);
            kernels::axpy_conj(-wk[i], w.data(), row, static_cast<std::size_t>(m));
            kernels::axpy_conj(-w[i], wk.data(), row, static_cast<std::size_t>(m));
        }
    }
    if (n >= 2) sub_c[n - 2] = a(n - 1, n - 2);
    for (int i = 0; i < n; ++i) t.diag[i] = a(i, i).real();

    // Phase factors turning the complex subdiagonal real nonnegative.
    std::vector<cx> phases(n, cx(1.0, 0.0));
    for (int k = 0; k + 1 < n; ++k) {
        const double mag = std::abs(sub_c[k]);
        t.sub[k] = mag;
        phases[k + 1] = mag > 0.0 ? phases[k] * (sub_c[k] / mag) : phases[k];
    }

    if (want_vectors) {
        CMat q = CMat::identity(n);
        std::vector<cx> acc(n);
        for (int k = n - 3; k >= 0; --k) {
            if (taus[k] == 0.0) continue;
            const int m = n - k - 1;
            // q <- (I - tau v v*) q, acting on rows k+1..n-1
            std::fill(acc.begin(), acc.end(), cx(0.0, 0.0));
            for (int i = 0; i < m; ++i)
                kernels::axpy(std::conj(a(k + 1 + i, k)), q.row_ptr(k + 1 + i), acc.data(),
                              static_cast<std::size_t>(n));
            for (int i = 0; i < m; ++i)
                kernels::axpy(-taus[k] * a(k + 1 + i, k), acc.data(), q.row_ptr(k + 1 + i),
                              static_cast<std::size_t>(n));
        }
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) q(i, j) *= phases[j];
        t.q = std::move(q);
    }
    return t;
}

// Implicit-shift QL on the real tridiagonal; rotations are carried into the
// complex columns of q when present.
void ql_implicit(Vec& d, Vec& e, CMat* q) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.push_back(0.0);  // sentinel
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > kMaxQLIterations)
                throw ConvergenceFailure("herm_eig: QL iteration cap exceeded", std::abs(e[l]));
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (q != nullptr) {
                    for (int k = 0; k < q->rows(); ++k) {
                        const cx f2 = (*q)(k, i + 1);
                        (*q)(k, i + 1) = s * (*q)(k, i) + c * f2;
                        (*q)(k, i) = c * (*q)(k, i) - s * f2;
                    }
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    e.pop_back();
}

void sort_ascending(Vec& d, CMat* q) {
    const int n = static_cast<int>(d.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    Vec ds(n);
    for (int i = 0; i < n; ++i) ds[i] = d[idx[i]];
    d = std::move(ds);
    if (q != nullptr) {
        CMat qs(q->rows(), q->cols());
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < q->rows(); ++i) qs(i, j) = (*q)(i, idx[j]);
        *q = std::move(qs);
    }
}

}  // namespace

EigResult herm_eig(const HermMatrix& a) {
    Tridiag t = tridiagonalize(a.mat(), true);
    ql_implicit(t.diag, t.sub, &t.q);
    sort_ascending(t.diag, &t.q);
    return {std::move(t.diag), std::move(t.q)};
}

Vec herm_eigvals(const HermMatrix& a) {
    Tridiag t = tridiagonalize(a.mat(), false);
    ql_implicit(t.diag, t.sub, nullptr);
    sort_ascending(t.diag, nullptr);
    return std::move(t.diag);
}

HermMatrix psd_sqrt(const HermMatrix& a, double clip_tol) {
    EigResult e = herm_eig(a);
    const double lmin = e.eigenvalues.front();
    if (lmin < -clip_tol)
        throw NotPSD("psd_sqrt: lambda_min = " + std::to_string(lmin) + " below -clip_tol", lmin);
    const int n = a.dim();
    // S = U diag(sqrt(lambda)) U*
    CMat s(n, n);
    for (int k = 0; k < n; ++k) {
        const double lk = std::sqrt(std::max(e.eigenvalues[static_cast<std::size_t>(k)], 0.0));
        if (lk == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const cx uik = lk * e.vectors(i, k);
            for (int j = 0; j < n; ++j) s(i, j) += uik * std::conj(e.vectors(j, k));
        }
    }
    return HermMatrix(std::move(s));
}

double op_norm(const HermMatrix& a) {
    const Vec ev = herm_eigvals(a);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

double sv_norm(const CMat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const CMat g = a.adjoint() * a;
    HermMatrix h(g, 1e-6);
    const double top = herm_eigvals(h).back();
    return std::sqrt(std::max(top, 0.0));
}

double commutator_norm(const HermMatrix& a, const HermMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("commutator_norm: dimension mismatch");
    CMat c = a.mat() * b.mat() - b.mat() * a.mat();
    // i[A,B] is Hermitian
    return op_norm(HermMatrix(c * cx(0.0, 1.0), 1e-6));
}

MatrixTuple direct_sum(const std::vector<MatrixTuple>& tuples) {
    if (tuples.empty()) throw DomainError("direct_sum: no tuples");
    const int d = tuples.front().d();
    for (const auto& t : tuples)
        if (t.d() != d) throw DimensionMismatch("direct_sum: mismatched d");
    std::vector<HermMatrix> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        CMat acc = tuples.front()[i].mat();
        for (std::size_t t = 1; t < tuples.size(); ++t) acc = CMat::direct_sum(acc, tuples[t][i].mat());
        out.emplace_back(std::move(acc));
    }
    return MatrixTuple(std::move(out));
}

}  // namespace dilatekit
