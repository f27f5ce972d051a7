#pragma once

#include "axo/matrix.hpp"

namespace axo::linalg {

/// Householder QR factorization A = Q R of a square matrix, with Q
/// materialized. No pivoting; meant for well-conditioned inputs such as
/// random Gaussian draws.
struct QrFactors {
    Matrix q;
    Matrix r;
};

QrFactors householder_qr(const Matrix& a);

/// Inverse of a square matrix via Householder QR with column pivoting.
/// Throws SingularMatrixError when a diagonal entry of R falls below
/// tau_rank times the largest one.
Matrix invert(const Matrix& a, double tau_rank);

/// Orthonormal basis of the orthogonal complement of a nonzero vector,
/// returned as (dim-1) rows of length dim.
///
/// Deterministic construction: the Householder reflection taking a0/||a0||
/// onto a coordinate axis is applied to the remaining axes, and each row is
/// sign-normalized so its first nonzero entry is positive.
Matrix orthonormal_kernel_basis(const Vector& a0);

}  // namespace axo::linalg
