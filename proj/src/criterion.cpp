#include "axo/criterion.hpp"

#include <cassert>
#include <cmath>

#include "axo/qr.hpp"
#include "axo/spectrum.hpp"

namespace axo::criterion {

using linalg::Matrix;
using linalg::Vector;

void ToleranceConfig::validate() const {
    if (!(tau_rel > 0.0) || !(tau_abs > 0.0) || !(tau_rank > 0.0)) {
        throw InvalidInputError("tolerances must be strictly positive");
    }
}

CoordinateMatrix::CoordinateMatrix(Matrix a) : a_(std::move(a)) {
    if (a_.rows() < 3 || a_.cols() < 4 || a_.rows() >= a_.cols()) {
        throw DimensionError(
            "coordinate matrix must be (m+1) x (n+1) with 2 <= m < n (at least 3 rows, "
            "more columns than rows)");
    }
    linalg::require_finite(a_, "coordinate matrix");
}

Vector CoordinateMatrix::affine_row(std::size_t i) const {
    Vector r(n());
    for (std::size_t j = 0; j < n(); ++j) r[j] = a_(i, j + 1);
    return r;
}

Matrix CoordinateMatrix::affine_block() const {
    Matrix b(m() + 1, n());
    for (std::size_t i = 0; i <= m(); ++i)
        for (std::size_t j = 0; j < n(); ++j) b(i, j) = a_(i, j + 1);
    return b;
}

int decomposability_threshold(std::size_t n, std::size_t m) {
    return 2 * static_cast<int>(m) - static_cast<int>(n) + 1;
}

Preconditions validate_preconditions(const CoordinateMatrix& cm, const ToleranceConfig& tol) {
    tol.validate();
    Preconditions pre;
    const Vector a0 = cm.affine_row(0);
    const double scale = cm.matrix().max_norm() * std::sqrt(static_cast<double>(cm.n()));
    pre.central = linalg::norm(a0) > tol.tau_rank * scale;
    pre.surjective =
        linalg::numerical_rank(cm.affine_block(), tol.tau_rank) == cm.m() + 1;
    return pre;
}

ReducedMatrix reduce(const CoordinateMatrix& cm) {
    ReducedMatrix rm;
    rm.a0 = cm.affine_row(0);
    rm.a0_norm_sq = linalg::dot(rm.a0, rm.a0);
    if (rm.a0_norm_sq == 0.0) {
        throw NotCentralError("reduce: top affine row is zero, mapping is not central");
    }
    const std::size_t m = cm.m();
    const std::size_t n = cm.n();
    rm.a_tilde = Matrix(m, n);
    for (std::size_t i = 1; i <= m; ++i) {
        const Vector ai = cm.affine_row(i);
        const double coeff = linalg::dot(rm.a0, ai) / rm.a0_norm_sq;
        for (std::size_t j = 0; j < n; ++j) rm.a_tilde(i - 1, j) = ai[j] - coeff * rm.a0[j];
    }
    return rm;
}

std::size_t least_multiplicity(std::span<const double> sigma, const ToleranceConfig& tol) {
    tol.validate();
    if (sigma.empty()) throw InvalidInputError("least multiplicity: empty spectrum");
    const double width = tol.tau_rel * sigma.front() + tol.tau_abs;
    const double least = sigma.back();
    std::size_t count = 0;
    for (double s : sigma) {
        if (s - least <= width) ++count;
    }
    return count;
}

CentralVerdict check_central_similarity(const ReducedMatrix& rm, std::size_t n, std::size_t m,
                                        const ToleranceConfig& tol) {
    if (rm.a_tilde.rows() != m || rm.a_tilde.cols() != n) {
        throw DimensionError("check: reduced matrix does not match the given dimensions");
    }
    CentralVerdict out;
    out.spectrum.sigma = linalg::singular_values(rm.a_tilde);
    out.spectrum.least_multiplicity = least_multiplicity(out.spectrum.sigma, tol);
    out.spectrum.threshold = decomposability_threshold(n, m);
    out.spectrum.all_equal = out.spectrum.least_multiplicity == m;
    out.verdict = static_cast<int>(out.spectrum.least_multiplicity) >= out.spectrum.threshold;
    return out;
}

OrthogonalVerdict check_orthogonal_similarity(const ReducedMatrix& rm, const ToleranceConfig& tol) {
    tol.validate();
    const Matrix g = linalg::gram(rm.a_tilde);
    const std::size_t m = g.rows();
    OrthogonalVerdict out;
    double trace = 0.0;
    for (std::size_t i = 0; i < m; ++i) trace += g(i, i);
    out.v_hat = trace / static_cast<double>(m);

    double deviation = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            deviation = std::max(deviation, std::abs(g(i, j) - (i == j ? out.v_hat : 0.0)));
    out.verdict = out.v_hat > tol.tau_abs && deviation <= tol.tau_rel * out.v_hat;
    return out;
}

Vector principal_point(const CoordinateMatrix& cm) {
    const Vector a0 = cm.affine_row(0);
    if (linalg::dot(a0, a0) == 0.0) {
        throw NotCentralError("principal point: top affine row is zero");
    }
    Vector p(cm.m() + 1);
    for (std::size_t i = 0; i <= cm.m(); ++i) p[i] = linalg::dot(a0, cm.affine_row(i));
    return p;
}

Vector vanishing_hyperplane(const CoordinateMatrix& cm) {
    return cm.matrix().row(0);
}

Matrix restricted_matrix(const CoordinateMatrix& cm) {
    const Vector a0 = cm.affine_row(0);
    if (linalg::dot(a0, a0) == 0.0) {
        throw NotCentralError("restricted matrix: top affine row is zero");
    }
    const Matrix basis = linalg::orthonormal_kernel_basis(a0);  // (n-1) x n
    const std::size_t m = cm.m();
    Matrix b(m, basis.rows());
    for (std::size_t i = 0; i < m; ++i) {
        const Vector ai = cm.affine_row(i + 1);
        for (std::size_t j = 0; j < basis.rows(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < basis.cols(); ++k) s += ai[k] * basis(j, k);
            b(i, j) = s;
        }
    }
    return b;
}

AnalysisReport analyze(const CoordinateMatrix& cm, const ToleranceConfig& tol) {
    AnalysisReport rep;
    rep.n = cm.n();
    rep.m = cm.m();
    rep.tolerances = tol;
    rep.preconditions = validate_preconditions(cm, tol);
    rep.vanishing_hyperplane = vanishing_hyperplane(cm);
    if (!rep.preconditions.central) return rep;

    ReducedMatrix rm = reduce(cm);
    const CentralVerdict central = check_central_similarity(rm, cm.n(), cm.m(), tol);
    rep.spectrum = central.spectrum;
    rep.principal_point = principal_point(cm);
    if (!rep.preconditions.surjective) {
        rep.reduced = std::move(rm.a_tilde);
        return rep;  // hypothesis fails, no verdicts
    }

    const OrthogonalVerdict orth = check_orthogonal_similarity(rm, tol);
    rep.central_similarity = central.verdict;
    rep.orthogonal_similarity = orth.verdict;
    if (orth.verdict) rep.v_hat = orth.v_hat;
    assert(!orth.verdict || central.verdict);
    rep.reduced = std::move(rm.a_tilde);
    return rep;
}

}  // namespace axo::criterion
