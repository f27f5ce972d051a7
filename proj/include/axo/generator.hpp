#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "axo/criterion.hpp"
#include "axo/matrix.hpp"

namespace axo::generator {

/// Seed of a deterministic draw. All generators are pure functions of their
/// arguments including the seed; the underlying stream is xoshiro256++
/// seeded through SplitMix64, with sub-streams split off per retry attempt.
struct Seed {
    std::uint64_t value = 0;
};

enum class Label {
    CentralSimilarity,     ///< built as central projection followed by a similarity
    OrthogonalSimilarity,  ///< the projection is additionally orthogonal
    PrescribedSpectrum,    ///< reduced matrix built to have a requested spectrum
    RandomValid,           ///< random draw that passes the preconditions, no verdict promise
};

/// Affine similarity x -> ratio * rotation * x + shift of the target space.
struct Similarity {
    double ratio = 1.0;
    linalg::Matrix rotation;  // m x m orthogonal
    linalg::Vector shift;     // length m
};

/// Geometric data proving a ground-truth label: the kernel of the mapping
/// (one affine row (1, z) and n-m-1 infinite rows (0, w_j)), the flat the
/// projection lands on (affine point q, orthonormal direction frame u), and
/// the similarity applied afterwards.
struct Witness {
    linalg::Matrix kernel_basis;   // (n-m) x (n+1)
    linalg::Vector flat_point_q;   // length n
    linalg::Matrix flat_frame_u;   // m x n, orthonormal rows
    Similarity similarity;
};

struct GeneratedInstance {
    criterion::CoordinateMatrix cm;
    Label label;
    std::optional<Witness> witness;  // geometric labels only
};

/// Haar-style random orthogonal matrix: QR of a seeded Gaussian draw with
/// the columns sign-flipped so the R-diagonal is positive. The degenerate
/// 1x1 case returns [[1]].
linalg::Matrix random_orthonormal(std::size_t dim, Seed seed);

/// Assembles the coordinate matrix of (similarity o central projection)
/// from explicit geometric data: projection onto the flat spanned by
/// (1, q), (0, u_1..u_m) along the kernel spanned by (1, z), (0, w_1..w_{n-m-1}),
/// followed by the similarity. Throws SingularMatrixError when the two
/// spans fail to decompose the whole space.
criterion::CoordinateMatrix compose_projection_similarity(
    const linalg::Vector& q, const linalg::Matrix& u, const linalg::Vector& z,
    const linalg::Matrix& w, const Similarity& sim, double tau_rank);

/// Instance decomposable into a central projection followed by a
/// similarity, by construction. Redraws on degenerate geometry (cap 16).
GeneratedInstance gen_geometric_central(std::size_t n, std::size_t m, Seed seed);

/// As gen_geometric_central, but the kernel's infinite directions are drawn
/// orthogonal to the flat's direction frame, which makes the projection
/// orthogonal; the analysis then finds equal singular values.
GeneratedInstance gen_geometric_orthogonal(std::size_t n, std::size_t m, Seed seed);

/// Instance whose reduced matrix has the requested singular values
/// (up to ordering). All requested values must be strictly positive.
GeneratedInstance gen_prescribed_spectrum(std::size_t n, std::size_t m,
                                          const std::vector<double>& sigma, Seed seed);

/// Gaussian coordinate matrix redrawn until the preconditions pass (cap 16).
GeneratedInstance gen_random_valid(std::size_t n, std::size_t m, Seed seed);

/// Adds seeded Gaussian noise of size epsilon * ||A||_max to every entry.
/// epsilon = 0 returns the input unchanged.
criterion::CoordinateMatrix perturb(const criterion::CoordinateMatrix& cm, double epsilon,
                                    Seed seed);

}  // namespace axo::generator
