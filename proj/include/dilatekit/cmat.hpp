#pragma once

#include <complex>
#include <vector>

#include "dilatekit/errors.hpp"

namespace dilatekit {

using cx = std::complex<double>;
using Vec = std::vector<double>;

// Dense complex matrix, row-major, value semantics.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMat zero(int rows, int cols) { return CMat(rows, cols); }
    static CMat diag(const Vec& d) {
        CMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    cx* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    const cx* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    CMat adjoint() const;
    CMat transpose() const;
    CMat conj() const;

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cx s);

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(CMat a, cx s) { return a *= s; }
    friend CMat operator*(cx s, CMat a) { return a *= s; }
    friend CMat operator*(CMat a, double s) { return a *= cx(s, 0.0); }
    friend CMat operator*(double s, CMat a) { return a *= cx(s, 0.0); }
    friend CMat operator*(const CMat& a, const CMat& b);  // matrix product

    double frob_norm() const;
    double max_abs() const;

    // max_{i,j} |A(i,j) - conj(A(j,i))|
    double herm_defect() const;
    void symmetrize();  // A <- (A + A*)/2

    CMat block(int i0, int j0, int rows, int cols) const;
    void set_block(int i0, int j0, const CMat& b);

    static CMat kron(const CMat& a, const CMat& b);
    static CMat direct_sum(const CMat& a, const CMat& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cx> a_;
};

// Hermitian matrix: symmetrized on construction, inputs with asymmetry
// beyond 1e-8 are rejected.
class HermMatrix {
public:
    explicit HermMatrix(CMat m, double reject_tol = 1e-8);
    static HermMatrix diag(const Vec& d) { return HermMatrix(CMat::diag(d)); }
    static HermMatrix identity(int n) { return HermMatrix(CMat::identity(n)); }
    static HermMatrix zero(int n) { return HermMatrix(CMat::zero(n, n)); }

    int dim() const { return m_.rows(); }
    const CMat& mat() const { return m_; }
    const cx& operator()(int i, int j) const { return m_(i, j); }

private:
    CMat m_;
};

// Ordered d-tuple of Hermitian matrices of one common dimension.
class MatrixTuple {
public:
    explicit MatrixTuple(std::vector<HermMatrix> mats);

    int d() const { return static_cast<int>(mats_.size()); }
    int n() const { return mats_.front().dim(); }
    const HermMatrix& operator[](int i) const { return mats_[static_cast<std::size_t>(i)]; }
    const std::vector<HermMatrix>& mats() const { return mats_; }

private:
    std::vector<HermMatrix> mats_;
};

}  // namespace dilatekit
