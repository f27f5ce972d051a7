#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axo/matrix.hpp"

namespace axo::criterion {

/// Tolerances of the decomposability analysis.
struct ToleranceConfig {
    double tau_rel = 1e-9;    ///< relative width of the singular-value cluster
    double tau_abs = 1e-12;   ///< absolute floor of the cluster width
    double tau_rank = 1e-10;  ///< numerical-rank threshold

    void validate() const;
};

/// Homogeneous Cartesian coordinate matrix of a linear mapping of Euclidean
/// n-space onto Euclidean m-space, embedded projectively.
///
/// The matrix has shape (m+1) x (n+1). Row and column 0 belong to the affine
/// origin of target and source; the remaining coordinates refer to
/// orthonormal directions of the hyperplane at infinity. Row i with its
/// leading entry dropped is the "affine row" a_i in R^n.
///
/// Shape constraints: 2 <= m < n (so at least 3 rows, at least 4 columns,
/// fewer rows than columns). Entries must be finite.
class CoordinateMatrix {
public:
    explicit CoordinateMatrix(linalg::Matrix a);

    std::size_t m() const { return a_.rows() - 1; }
    std::size_t n() const { return a_.cols() - 1; }
    const linalg::Matrix& matrix() const { return a_; }

    /// a_i = (A[i][1], ..., A[i][n]).
    linalg::Vector affine_row(std::size_t i) const;

    /// The (m+1) x n block of all affine rows stacked.
    linalg::Matrix affine_block() const;

private:
    linalg::Matrix a_;
};

/// Whether the mapping satisfies the hypotheses of the decomposability
/// criterion: the kernel is not at infinity (central) and the mapping is
/// onto (surjective).
struct Preconditions {
    bool central = false;
    bool surjective = false;
};

/// Reduction of the coordinate matrix: each affine row a_1..a_m with its
/// component along a_0 removed,
///
///     row i of a_tilde  =  a_i - (a_0 . a_i) / (a_0 . a_0) * a_0.
///
/// The rows of a_tilde are orthogonal to a_0 by construction; a_tilde
/// carries the singular-value data that decides decomposability.
struct ReducedMatrix {
    linalg::Vector a0;       ///< top affine row, length n
    linalg::Matrix a_tilde;  ///< m x n
    double a0_norm_sq = 0.0;
};

/// Descending singular values of the reduced matrix with the multiplicity
/// data the criterion compares.
struct SpectrumReport {
    std::vector<double> sigma;
    std::size_t least_multiplicity = 0;
    int threshold = 0;  ///< 2m - n + 1, may be zero or negative
    bool all_equal = false;
};

struct CentralVerdict {
    bool verdict = false;
    SpectrumReport spectrum;
};

struct OrthogonalVerdict {
    bool verdict = false;
    double v_hat = 0.0;  ///< trace(a_tilde a_tilde^T) / m
};

/// Everything the analysis finds out about one coordinate matrix.
///
/// Fields are present according to how far the hypotheses carry:
/// - reduced, spectrum, principal_point: present iff the mapping is central;
/// - verdicts: present iff it is central and surjective;
/// - v_hat: present iff orthogonal_similarity holds.
/// Whenever both verdicts are present, orthogonal implies central.
struct AnalysisReport {
    std::size_t n = 0;
    std::size_t m = 0;
    Preconditions preconditions;
    std::optional<linalg::Matrix> reduced;  ///< a_tilde
    std::optional<SpectrumReport> spectrum;
    std::optional<bool> central_similarity;
    std::optional<bool> orthogonal_similarity;
    std::optional<double> v_hat;
    std::optional<linalg::Vector> principal_point;
    linalg::Vector vanishing_hyperplane;
    ToleranceConfig tolerances;
};

/// 2m - n + 1: the multiplicity the least singular value must reach.
int decomposability_threshold(std::size_t n, std::size_t m);

/// Central: the top affine row a_0 is nonzero (relative to the matrix
/// scale). Surjective: the (m+1) x n block of affine rows has full row rank
/// m+1, which also forces a_0 != 0.
Preconditions validate_preconditions(const CoordinateMatrix& cm, const ToleranceConfig& tol);

/// Removes the a_0 component from every other affine row, in one pass and
/// exactly by the formula above. Throws NotCentralError when a_0 = 0.
ReducedMatrix reduce(const CoordinateMatrix& cm);

/// Multiplicity of the least value of a descending non-negative sequence:
/// the number of entries within tau_rel * sigma[0] + tau_abs of the last one.
std::size_t least_multiplicity(std::span<const double> sigma, const ToleranceConfig& tol);

/// Decomposability into a central projection followed by a similarity:
/// the least singular value of a_tilde must have multiplicity >= 2m - n + 1.
/// A threshold <= 1 makes the verdict trivially true.
CentralVerdict check_central_similarity(const ReducedMatrix& rm, std::size_t n, std::size_t m,
                                        const ToleranceConfig& tol);

/// Decomposability into an orthogonal central projection followed by a
/// similarity: a_tilde a_tilde^T must be v * identity for some v > 0.
OrthogonalVerdict check_orthogonal_similarity(const ReducedMatrix& rm, const ToleranceConfig& tol);

/// Homogeneous coordinates of the image of the direction orthogonal to the
/// vanishing hyperplane: ((a_0.a_0), (a_0.a_1), ..., (a_0.a_m)),
/// unnormalized. Throws NotCentralError when a_0 = 0.
linalg::Vector principal_point(const CoordinateMatrix& cm);

/// Coefficients of the hyperplane mapped to infinity: the top row of the
/// coordinate matrix, unnormalized, length n+1.
linalg::Vector vanishing_hyperplane(const CoordinateMatrix& cm);

/// Matrix of the mapping restricted to the intersection of the vanishing
/// hyperplane with the space at infinity, with respect to the deterministic
/// orthonormal basis of that intersection: entry (i, j) is a_{i+1} . e_j.
/// Shares its singular values with reduce(cm).a_tilde, which is the
/// independent route the tests check against. Throws NotCentralError when
/// a_0 = 0.
linalg::Matrix restricted_matrix(const CoordinateMatrix& cm);

/// Full pipeline: preconditions, reduction, spectrum, both verdicts,
/// principal point, vanishing hyperplane. Never throws on hypothesis
/// failure; the report's optional fields say how far the analysis went.
AnalysisReport analyze(const CoordinateMatrix& cm, const ToleranceConfig& tol = {});

}  // namespace axo::criterion
