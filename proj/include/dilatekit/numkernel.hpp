#pragma once

#include <vector>

#include "dilatekit/cmat.hpp"

namespace dilatekit {

struct EigResult {
    Vec eigenvalues;  // ascending
    CMat vectors;     // unitary, columns are eigenvectors
};

// Full Hermitian eigendecomposition: A = U diag(lambda) U*.
EigResult herm_eig(const HermMatrix& a);

// Eigenvalues only (ascending); skips all eigenvector work.
Vec herm_eigvals(const HermMatrix& a);

// Hermitian PSD square root. Eigenvalues in [-clip_tol, 0) are clamped to 0;
// anything below -clip_tol raises NotPSD.
HermMatrix psd_sqrt(const HermMatrix& a, double clip_tol = 1e-9);

inline CMat kron(const CMat& a, const CMat& b) { return CMat::kron(a, b); }

// Spectral norm of a Hermitian matrix (max |eigenvalue|).
double op_norm(const HermMatrix& a);

// Spectral norm (largest singular value) of a general matrix.
double sv_norm(const CMat& a);

// || AB - BA || in spectral norm.
double commutator_norm(const HermMatrix& a, const HermMatrix& b);

// Componentwise block-diagonal concatenation of tuples with equal d.
MatrixTuple direct_sum(const std::vector<MatrixTuple>& tuples);

}  // namespace dilatekit
