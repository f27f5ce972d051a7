#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "axo/criterion.hpp"
#include "axo/generator.hpp"
#include "axo/matrix.hpp"
#include "axo/spectrum.hpp"

using namespace axo;
using criterion::CoordinateMatrix;
using generator::Seed;
using linalg::Matrix;
using linalg::Vector;

namespace {

const std::vector<std::pair<std::size_t, std::size_t>> kGrid = {
    {3, 2}, {4, 2}, {4, 3}, {5, 3}, {6, 4}};

double orthogonality_residual(const Matrix& q) {
    const Matrix g = linalg::multiply(q.transposed(), q);
    double d = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            d = std::max(d, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return d;
}

// Stacks the witness kernel rows with the homogeneous flat frame
// (1, q), (0, u_1..u_m); together they must span R^{n+1}.
Matrix witness_span(const generator::GeneratedInstance& inst) {
    const auto& w = *inst.witness;
    const std::size_t n = inst.cm.n();
    const std::size_t m = inst.cm.m();
    Matrix all(w.kernel_basis.rows() + m + 1, n + 1);
    for (std::size_t i = 0; i < w.kernel_basis.rows(); ++i)
        for (std::size_t j = 0; j <= n; ++j) all(i, j) = w.kernel_basis(i, j);
    const std::size_t base = w.kernel_basis.rows();
    all(base, 0) = 1.0;
    for (std::size_t j = 0; j < n; ++j) all(base, j + 1) = w.flat_point_q[j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) all(base + 1 + i, j + 1) = w.flat_frame_u(i, j);
    return all;
}

}  // namespace

TEST_CASE("random orthonormal: determinism, unit case, orthogonality") {
    const Matrix q1 = generator::random_orthonormal(5, Seed{42});
    const Matrix q2 = generator::random_orthonormal(5, Seed{42});
    CHECK(q1 == q2);
    CHECK(q1 != generator::random_orthonormal(5, Seed{43}));

    CHECK(generator::random_orthonormal(1, Seed{9}) == Matrix::from_rows({{1.0}}));

    for (std::size_t dim : {2, 3, 7, 16}) {
        const Matrix q = generator::random_orthonormal(dim, Seed{dim});
        CHECK(orthogonality_residual(q) <= 1e-12);
        for (std::size_t j = 0; j < dim; ++j) {
            double colnorm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) colnorm += q(i, j) * q(i, j);
            CHECK(std::sqrt(colnorm) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("composing the hand projection gives the classical matrix") {
    // Projection of 3-space onto the plane x3 = 0 from the center (0,0,-1),
    // no similarity on top: inverting the mixed basis by hand gives this A.
    generator::Similarity identity;
    identity.ratio = 1.0;
    identity.rotation = Matrix::identity(2);
    identity.shift = Vector(2);
    const CoordinateMatrix cm = generator::compose_projection_similarity(
        Vector(3), Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}), Vector{0, 0, -1}, Matrix(0, 3),
        identity, 1e-10);
    CHECK(cm.matrix() == Matrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}));

    const auto rep = criterion::analyze(cm);
    CHECK(rep.central_similarity == std::optional<bool>(true));
    CHECK(rep.orthogonal_similarity == std::optional<bool>(true));
    CHECK(rep.principal_point == std::optional<Vector>(Vector{1, 0, 0}));
}

TEST_CASE("geometric central instances satisfy the criterion") {
    const auto inst32 = generator::gen_geometric_central(3, 2, Seed{42});
    CHECK(criterion::analyze(inst32.cm).central_similarity == std::optional<bool>(true));

    const auto inst53 = generator::gen_geometric_central(5, 3, Seed{7});
    const auto rep53 = criterion::analyze(inst53.cm);
    CHECK(rep53.preconditions.central);
    CHECK(rep53.preconditions.surjective);
    CHECK(rep53.central_similarity == std::optional<bool>(true));

    for (const auto& [n, m] : kGrid) {
        for (unsigned seed = 0; seed < 40; ++seed) {
            const auto inst = generator::gen_geometric_central(n, m, Seed{seed});
            CHECK(inst.label == generator::Label::CentralSimilarity);
            const auto rep = criterion::analyze(inst.cm);
            CHECK(rep.central_similarity == std::optional<bool>(true));
        }
    }

    CHECK_THROWS_AS(generator::gen_geometric_central(3, 1, Seed{0}), InvalidInputError);
    CHECK_THROWS_AS(generator::gen_geometric_central(3, 3, Seed{0}), InvalidInputError);
}

TEST_CASE("geometric orthogonal instances satisfy the stronger criterion") {
    // With n - m - 1 = 0 there are no infinite kernel directions and the
    // orthogonality condition is vacuous: every geometric instance passes.
    for (unsigned seed = 100; seed < 120; ++seed) {
        const auto inst = generator::gen_geometric_central(3, 2, Seed{seed});
        CHECK(criterion::analyze(inst.cm).orthogonal_similarity == std::optional<bool>(true));
    }

    const auto inst42 = generator::gen_geometric_orthogonal(4, 2, Seed{3});
    const auto rep42 = criterion::analyze(inst42.cm);
    CHECK(rep42.orthogonal_similarity == std::optional<bool>(true));
    REQUIRE(rep42.v_hat.has_value());
    // a_tilde a_tilde^T = v I within tolerance
    const Matrix g = linalg::gram(criterion::reduce(inst42.cm).a_tilde);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(g(i, j) - (i == j ? *rep42.v_hat : 0.0)) <= 1e-9 * *rep42.v_hat);

    CHECK(criterion::analyze(generator::gen_geometric_orthogonal(5, 3, Seed{11}).cm)
              .orthogonal_similarity == std::optional<bool>(true));

    for (const auto& [n, m] : kGrid) {
        for (unsigned seed = 0; seed < 40; ++seed) {
            const auto inst = generator::gen_geometric_orthogonal(n, m, Seed{seed});
            const auto rep = criterion::analyze(inst.cm);
            CHECK(rep.orthogonal_similarity == std::optional<bool>(true));
            CHECK(rep.central_similarity == std::optional<bool>(true));
        }
    }
}

TEST_CASE("witness data is coherent") {
    for (const auto& [n, m] : kGrid) {
        const auto inst = generator::gen_geometric_orthogonal(n, m, Seed{500 + n * 10 + m});
        REQUIRE(inst.witness.has_value());
        const auto& w = *inst.witness;
        CHECK(w.kernel_basis.rows() == n - m);
        CHECK(w.kernel_basis(0, 0) == 1.0);
        CHECK(orthogonality_residual(w.flat_frame_u.transposed()) <= 1e-12);
        CHECK(linalg::numerical_rank(witness_span(inst), 1e-10) == n + 1);
        CHECK(w.similarity.ratio >= 0.5);
        CHECK(w.similarity.ratio <= 2.0);
        CHECK(orthogonality_residual(w.similarity.rotation) <= 1e-12);
    }

    // Non-geometric labels carry no witness.
    CHECK_FALSE(generator::gen_random_valid(3, 2, Seed{1}).witness.has_value());
    CHECK_FALSE(generator::gen_prescribed_spectrum(3, 2, {1, 1}, Seed{1}).witness.has_value());
}

TEST_CASE("prescribed spectrum round-trips through the reduction") {
    const auto i1 = generator::gen_prescribed_spectrum(3, 2, {1, 1}, Seed{5});
    CHECK(criterion::analyze(i1.cm).central_similarity == std::optional<bool>(true));

    const auto i2 = generator::gen_prescribed_spectrum(3, 2, {2, 1}, Seed{5});
    CHECK(criterion::analyze(i2.cm).central_similarity == std::optional<bool>(false));

    const auto i3 = generator::gen_prescribed_spectrum(4, 3, {3, 3, 3}, Seed{5});
    const auto rep3 = criterion::analyze(i3.cm);
    CHECK(rep3.central_similarity == std::optional<bool>(true));
    CHECK(rep3.orthogonal_similarity == std::optional<bool>(true));

    std::vector<std::vector<double>> requested = {
        {1, 1}, {2, 1}, {0.5, 0.25}, {3, 2, 1}, {1e-3, 1e-3, 2e-3}, {4, 4, 4, 4}};
    for (unsigned trial = 0; trial < 200; ++trial) {
        const auto& sig = requested[trial % requested.size()];
        const std::size_t m = sig.size();
        const std::size_t n = m + 1 + trial % 3;
        const auto inst = generator::gen_prescribed_spectrum(n, m, sig, Seed{trial});

        std::vector<double> expected = sig;
        std::sort(expected.rbegin(), expected.rend());
        const auto got = linalg::singular_values(criterion::reduce(inst.cm).a_tilde);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < m; ++i)
            CHECK(std::abs(got[i] - expected[i]) <= 1e-9 * expected[0]);
    }

    CHECK_THROWS_AS(generator::gen_prescribed_spectrum(3, 2, {1}, Seed{0}), InvalidInputError);
    CHECK_THROWS_AS(generator::gen_prescribed_spectrum(3, 2, {1, 0}, Seed{0}),
                    InvalidInputError);
    CHECK_THROWS_AS(generator::gen_prescribed_spectrum(3, 2, {1, -2}, Seed{0}),
                    InvalidInputError);
}

TEST_CASE("random valid instances pass the preconditions and are deterministic") {
    for (const auto& [n, m] : kGrid) {
        for (unsigned seed = 0; seed < 25; ++seed) {
            const auto inst = generator::gen_random_valid(n, m, Seed{seed});
            const auto pre = criterion::validate_preconditions(inst.cm, {});
            CHECK(pre.central);
            CHECK(pre.surjective);
        }
    }
    CHECK(generator::gen_random_valid(6, 4, Seed{77}).cm.matrix() ==
          generator::gen_random_valid(6, 4, Seed{77}).cm.matrix());
    CHECK(generator::gen_geometric_central(4, 3, Seed{77}).cm.matrix() ==
          generator::gen_geometric_central(4, 3, Seed{77}).cm.matrix());
    CHECK(generator::gen_prescribed_spectrum(4, 2, {2, 1}, Seed{77}).cm.matrix() ==
          generator::gen_prescribed_spectrum(4, 2, {2, 1}, Seed{77}).cm.matrix());
}

TEST_CASE("perturbation: identity at zero, genericity at 1e-3, rank stability at 1e-6") {
    const CoordinateMatrix f1(
        Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(generator::perturb(f1, 0.0, Seed{3}).matrix() == f1.matrix());
    CHECK_THROWS_AS(generator::perturb(f1, -1.0, Seed{3}), InvalidInputError);

    // Noise far above the clustering tolerance splits F1's double singular
    // value essentially always.
    int broken = 0;
    for (unsigned seed = 0; seed < 100; ++seed) {
        const auto moved = generator::perturb(f1, 1e-3, Seed{seed});
        const auto rep = criterion::analyze(moved);
        if (rep.central_similarity == std::optional<bool>(false)) ++broken;
    }
    CHECK(broken >= 95);

    for (unsigned seed = 0; seed < 50; ++seed) {
        const auto inst = generator::gen_random_valid(4, 2, Seed{9000 + seed});
        const auto moved = generator::perturb(inst.cm, 1e-6, Seed{seed});
        const auto pre = criterion::validate_preconditions(moved, {});
        CHECK(pre.central);
        CHECK(pre.surjective);
    }
}

TEST_CASE("genericity of random instances at desk scale") {
    // (3,2): threshold 2, and a random spectrum has distinct values.
    int decomposable = 0;
    for (unsigned seed = 0; seed < 200; ++seed) {
        const auto inst = generator::gen_random_valid(3, 2, Seed{123000 + seed});
        if (criterion::analyze(inst.cm).central_similarity == std::optional<bool>(true))
            ++decomposable;
    }
    CHECK(decomposable <= 2);

    // (5,2): threshold 0, every valid instance passes.
    for (unsigned seed = 0; seed < 200; ++seed) {
        const auto inst = generator::gen_random_valid(5, 2, Seed{456000 + seed});
        CHECK(criterion::analyze(inst.cm).central_similarity == std::optional<bool>(true));
    }
}
