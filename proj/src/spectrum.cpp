#include "axo/spectrum.hpp"

#include <cmath>

#include "axo/eigen.hpp"

namespace axo::linalg {

std::vector<double> singular_values(const Matrix& b) {
    if (b.rows() == 0 || b.cols() == 0) return {};
    const Matrix g = b.rows() <= b.cols() ? gram(b) : gram(b.transposed());
    SymmetricEigen eig = jacobi_symmetric_eigen(g);

    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : std::abs(eig.eigenvalues.front());
    std::vector<double> sigma(eig.eigenvalues.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        double lambda = eig.eigenvalues[i];
        if (lambda < 0.0) {
            if (lambda < -1e-10 * lambda_max) {
                throw InvalidInputError("singular values: Gram eigenvalue strongly negative");
            }
            lambda = 0.0;
        }
        sigma[i] = std::sqrt(lambda);
    }
    return sigma;
}

std::size_t numerical_rank(const Matrix& b, double tau_rank) {
    if (tau_rank <= 0.0) throw InvalidInputError("numerical rank: tau_rank must be positive");
    const std::vector<double> sigma = singular_values(b);
    if (sigma.empty() || sigma.front() == 0.0) return 0;
    std::size_t rank = 0;
    for (double s : sigma) {
        if (s > tau_rank * sigma.front()) ++rank;
    }
    return rank;
}

}  // namespace axo::linalg
