#include "dilatekit/cmat.hpp"

#include <algorithm>
#include <cmath>

#include "dilatekit/kernels.hpp"

namespace dilatekit {

CMat CMat::adjoint() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMat CMat::transpose() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

CMat CMat::conj() const {
    CMat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
    return r;
}

CMat& CMat::operator+=(const CMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMat& CMat::operator*=(cx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix mul: inner dimension mismatch");
    CMat c(a.rows(), b.cols());
    const std::size_t m = static_cast<std::size_t>(b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        cx* ci = c.row_ptr(i);
        for (int k = 0; k < a.cols(); ++k) {
            const cx aik = a(i, k);
            if (aik == cx(0.0, 0.0)) continue;
            kernels::axpy(aik, b.row_ptr(k), ci, m);
        }
    }
    return c;
}

double CMat::frob_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMat::herm_defect() const {
    if (!square()) throw DimensionMismatch("herm_defect: matrix not square");
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

void CMat::symmetrize() {
    for (int i = 0; i < rows_; ++i) {
        (*this)(i, i) = cx((*this)(i, i).real(), 0.0);
        for (int j = i + 1; j < cols_; ++j) {
            const cx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = v;
            (*this)(j, i) = std::conj(v);
        }
    }
}

CMat CMat::block(int i0, int j0, int rows, int cols) const {
    CMat r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
    return r;
}

void CMat::set_block(int i0, int j0, const CMat& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

CMat CMat::kron(const CMat& a, const CMat& b) {
    CMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cx aij = a(i, j);
            if (aij == cx(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                kernels::axpy(aij, b.row_ptr(k), r.row_ptr(i * b.rows() + k) + static_cast<std::size_t>(j) * b.cols(),
                              static_cast<std::size_t>(b.cols()));
        }
    return r;
}

CMat CMat::direct_sum(const CMat& a, const CMat& b) {
    CMat r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

HermMatrix::HermMatrix(CMat m, double reject_tol) : m_(std::move(m)) {
    if (!m_.square()) throw DimensionMismatch("HermMatrix: matrix not square");
    if (m_.rows() == 0) throw DomainError("HermMatrix: empty matrix");
    const double defect = m_.herm_defect();
    if (defect > reject_tol) throw DomainError("HermMatrix: asymmetry " + std::to_string(defect) + " exceeds tolerance");
    m_.symmetrize();
}

MatrixTuple::MatrixTuple(std::vector<HermMatrix> mats) : mats_(std::move(mats)) {
    if (mats_.empty()) throw DomainError("MatrixTuple: empty tuple");
    for (const auto& m : mats_)
        if (m.dim() != mats_.front().dim()) throw DimensionMismatch("MatrixTuple: nonuniform dimension");
}

}  // namespace dilatekit
