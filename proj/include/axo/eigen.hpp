#pragma once

#include <vector>

#include "axo/matrix.hpp"

namespace axo::linalg {

/// Eigendecomposition S = Q diag(eigenvalues) Q^T of a symmetric matrix.
/// Eigenvalues are sorted in descending order; column j of `eigenvectors`
/// belongs to eigenvalues[j].
struct SymmetricEigen {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Cyclic Jacobi rotations on a symmetric matrix.
///
/// Converged when the off-diagonal Frobenius norm drops below
/// tol * ||S||_F; gives up after 64 sweeps (ConvergenceError), which on
/// well-formed symmetric input of the sizes used here never happens.
///
/// Throws InvalidInputError on non-square input, NaN/infinity, or asymmetry
/// beyond 1e-12 * ||S||_max.
SymmetricEigen jacobi_symmetric_eigen(const Matrix& s, double tol = 1e-14);

}  // namespace axo::linalg
