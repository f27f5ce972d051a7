#pragma once

#include <cstddef>
#include <vector>

#include "axo/matrix.hpp"

namespace axo::linalg {

/// Singular values of b in descending order, length min(rows, cols).
///
/// Computed as square roots of the eigenvalues of the smaller Gram matrix
/// (b b^T or b^T b). This loses accuracy quadratically for values near zero
/// relative to the largest one; fine here because the decomposability
/// criterion only compares values of like magnitude. Eigenvalues that round
/// slightly negative are clamped to zero; anything below -1e-10 times the
/// largest eigenvalue indicates a broken input and raises InvalidInputError.
std::vector<double> singular_values(const Matrix& b);

/// Number of singular values exceeding tau_rank times the largest one.
/// The zero matrix has rank 0. Inherits the Gram-matrix resolution limit:
/// a rank drop is only detected reliably when the vanishing values are
/// exactly zero (structured input) or below it by construction, since
/// rounding shows up at about sqrt(eps) * sigma_max.
std::size_t numerical_rank(const Matrix& b, double tau_rank);

}  // namespace axo::linalg
