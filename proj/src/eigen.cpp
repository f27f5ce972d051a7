#include "axo/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace axo::linalg {

namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// One Jacobi rotation zeroing a(p,q); accumulates the rotation into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;

    const double app = a(p, p);
    const double aqq = a(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    // t = tan of the rotation angle; the smaller root keeps |t| <= 1.
    double t;
    if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);
    } else if (theta >= 0.0) {
        t = 1.0 / (theta + std::sqrt(1.0 + theta * theta));
    } else {
        t = -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == p || i == q) continue;
        const double aip = a(i, p);
        const double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(p, i) = a(i, p);
        a(i, q) = s * aip + c * aiq;
        a(q, i) = a(i, q);
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double vip = v(i, p);
        const double viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
    }
}

}  // namespace

SymmetricEigen jacobi_symmetric_eigen(const Matrix& s, double tol) {
    if (s.rows() != s.cols()) throw InvalidInputError("eigen: matrix is not square");
    require_finite(s, "eigen");
    const std::size_t n = s.rows();
    const double scale = s.max_norm();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(s(i, j) - s(j, i)) > 1e-12 * scale)
                throw InvalidInputError("eigen: matrix is not symmetric");

    Matrix a = s;
    // Exact symmetry so the rotation updates stay consistent.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);

    Matrix v = Matrix::identity(n);
    const double norm_f = a.frobenius_norm();
    if (norm_f > 0.0) {
        bool converged = off_diagonal_norm(a) <= tol * norm_f;
        for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
            converged = off_diagonal_norm(a) <= tol * norm_f;
        }
        if (!converged) throw ConvergenceError("eigen: Jacobi did not converge in 64 sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SymmetricEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace axo::linalg
