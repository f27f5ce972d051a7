#include "axo/generator.hpp"

#include <cmath>
#include <string>

#include "axo/qr.hpp"
#include "axo/rng.hpp"

namespace axo::generator {

using linalg::Matrix;
using linalg::Vector;

namespace {

constexpr int kRetryCap = 16;

Vector gaussian_vector(rng::Xoshiro256pp& r, std::size_t dim) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = r.gaussian();
    return v;
}

Matrix gaussian_matrix(rng::Xoshiro256pp& r, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.gaussian();
    return m;
}

Matrix random_orthonormal_draw(rng::Xoshiro256pp& r, std::size_t dim) {
    if (dim == 0) throw InvalidInputError("random orthonormal: dim must be >= 1");
    if (dim == 1) {
        r.gaussian();  // keep the stream position consistent with dim > 1
        return Matrix::from_rows({{1.0}});
    }
    const Matrix g = gaussian_matrix(r, dim, dim);
    linalg::QrFactors qr = linalg::householder_qr(g);
    for (std::size_t k = 0; k < dim; ++k) {
        if (qr.r(k, k) < 0.0) {
            for (std::size_t i = 0; i < dim; ++i) qr.q(i, k) = -qr.q(i, k);
        }
    }
    return qr.q;
}

Matrix take_rows(const Matrix& m, std::size_t count) {
    Matrix out(count, m.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

Similarity draw_similarity(rng::Xoshiro256pp& r, std::size_t m) {
    Similarity sim;
    sim.ratio = r.log_uniform(0.5, 2.0);
    sim.rotation = random_orthonormal_draw(r, m);
    sim.shift = Vector(m);
    for (std::size_t i = 0; i < m; ++i) sim.shift[i] = r.uniform(-1.0, 1.0);
    return sim;
}

void check_dims(std::size_t n, std::size_t m) {
    if (m < 2 || m >= n) throw InvalidInputError("generator: need 2 <= m < n");
}

Witness make_witness(const Vector& q, const Matrix& u, const Vector& z, const Matrix& w,
                     const Similarity& sim) {
    const std::size_t n = q.dim();
    Witness wit;
    wit.kernel_basis = Matrix(1 + w.rows(), n + 1);
    wit.kernel_basis(0, 0) = 1.0;
    for (std::size_t j = 0; j < n; ++j) wit.kernel_basis(0, j + 1) = z[j];
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) wit.kernel_basis(i + 1, j + 1) = w(i, j);
    wit.flat_point_q = q;
    wit.flat_frame_u = u;
    wit.similarity = sim;
    return wit;
}

GeneratedInstance gen_geometric(std::size_t n, std::size_t m, Seed seed, bool orthogonal) {
    check_dims(n, m);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        rng::Xoshiro256pp r(rng::split(seed.value, static_cast<std::uint64_t>(attempt)));
        const Matrix frame = random_orthonormal_draw(r, n);
        const Matrix u = take_rows(frame, m);
        const Vector q = gaussian_vector(r, n);
        const Vector z = gaussian_vector(r, n);

        // Infinite kernel directions: free Gaussians, or (orthogonal case)
        // Gaussian combinations of the frame rows orthogonal to u.
        Matrix w(n - m - 1, n);
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (orthogonal) {
                for (std::size_t k = 0; k < n - m; ++k) {
                    const double c = r.gaussian();
                    for (std::size_t j = 0; j < n; ++j) w(i, j) += c * frame(m + k, j);
                }
            } else {
                for (std::size_t j = 0; j < n; ++j) w(i, j) = r.gaussian();
            }
        }

        const Similarity sim = draw_similarity(r, m);
        try {
            criterion::CoordinateMatrix cm = compose_projection_similarity(
                q, u, z, w, sim, criterion::ToleranceConfig{}.tau_rank);
            return {std::move(cm),
                    orthogonal ? Label::OrthogonalSimilarity : Label::CentralSimilarity,
                    make_witness(q, u, z, w, sim)};
        } catch (const SingularMatrixError&) {
            continue;
        }
    }
    throw RetryExhaustedError("generator: no nondegenerate draw in 16 attempts");
}

}  // namespace

Matrix random_orthonormal(std::size_t dim, Seed seed) {
    rng::Xoshiro256pp r(seed.value);
    return random_orthonormal_draw(r, dim);
}

criterion::CoordinateMatrix compose_projection_similarity(const Vector& q, const Matrix& u,
                                                          const Vector& z, const Matrix& w,
                                                          const Similarity& sim,
                                                          double tau_rank) {
    const std::size_t n = q.dim();
    const std::size_t m = u.rows();
    if (u.cols() != n || z.dim() != n || w.cols() != n || w.rows() != n - m - 1 ||
        sim.rotation.rows() != m || sim.rotation.cols() != m || sim.shift.dim() != m) {
        throw DimensionError("compose: inconsistent geometric data");
    }

    // Columns of the mixed basis: the flat's frame (1,q), (0,u_i), then the
    // kernel's frame (1,z), (0,w_j).
    Matrix basis(n + 1, n + 1);
    basis(0, 0) = 1.0;
    for (std::size_t i = 0; i < n; ++i) basis(i + 1, 0) = q[i];
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) basis(i + 1, k + 1) = u(k, i);
    basis(0, m + 1) = 1.0;
    for (std::size_t i = 0; i < n; ++i) basis(i + 1, m + 1) = z[i];
    for (std::size_t k = 0; k < w.rows(); ++k)
        for (std::size_t i = 0; i < n; ++i) basis(i + 1, m + 2 + k) = w(k, i);

    const Matrix inv = linalg::invert(basis, tau_rank);
    const Matrix projection = take_rows(inv, m + 1);

    Matrix s(m + 1, m + 1);
    s(0, 0) = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        s(i + 1, 0) = sim.shift[i];
        for (std::size_t j = 0; j < m; ++j) s(i + 1, j + 1) = sim.ratio * sim.rotation(i, j);
    }
    return criterion::CoordinateMatrix(linalg::multiply(s, projection));
}

GeneratedInstance gen_geometric_central(std::size_t n, std::size_t m, Seed seed) {
    return gen_geometric(n, m, seed, /*orthogonal=*/false);
}

GeneratedInstance gen_geometric_orthogonal(std::size_t n, std::size_t m, Seed seed) {
    return gen_geometric(n, m, seed, /*orthogonal=*/true);
}

GeneratedInstance gen_prescribed_spectrum(std::size_t n, std::size_t m,
                                          const std::vector<double>& sigma, Seed seed) {
    check_dims(n, m);
    if (sigma.size() != m) throw InvalidInputError("prescribed spectrum: need m values");
    for (double s : sigma) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw InvalidInputError("prescribed spectrum: values must be positive and finite");
        }
    }

    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        rng::Xoshiro256pp r(rng::split(seed.value, static_cast<std::uint64_t>(attempt)));
        const Vector a0 = gaussian_vector(r, n);
        if (linalg::norm(a0) < 1e-8) continue;

        // Orthonormal m-frame inside the complement of a0, spun by a random
        // rotation so the frame is not tied to the deterministic basis.
        const Matrix complement = linalg::orthonormal_kernel_basis(a0);  // (n-1) x n
        const Matrix spin = take_rows(random_orthonormal_draw(r, n - 1), m);
        const Matrix e_frame = linalg::multiply(spin, complement);  // m x n
        const Matrix rot = random_orthonormal_draw(r, m);

        // a_tilde = rot * diag(sigma) * e_frame has exactly the requested spectrum.
        Matrix scaled = e_frame;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= sigma[i];
        const Matrix a_tilde = linalg::multiply(rot, scaled);

        Matrix a(m + 1, n + 1);
        for (std::size_t i = 0; i <= m; ++i) a(i, 0) = r.gaussian();
        for (std::size_t j = 0; j < n; ++j) a(0, j + 1) = a0[j];
        for (std::size_t i = 0; i < m; ++i) {
            const double gamma = r.gaussian();
            for (std::size_t j = 0; j < n; ++j)
                a(i + 1, j + 1) = a_tilde(i, j) + gamma * a0[j];
        }
        return {criterion::CoordinateMatrix(std::move(a)), Label::PrescribedSpectrum,
                std::nullopt};
    }
    throw RetryExhaustedError("prescribed spectrum: no usable draw in 16 attempts");
}

GeneratedInstance gen_random_valid(std::size_t n, std::size_t m, Seed seed) {
    check_dims(n, m);
    const criterion::ToleranceConfig tol;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        rng::Xoshiro256pp r(rng::split(seed.value, static_cast<std::uint64_t>(attempt)));
        criterion::CoordinateMatrix cm(gaussian_matrix(r, m + 1, n + 1));
        const criterion::Preconditions pre = criterion::validate_preconditions(cm, tol);
        if (pre.central && pre.surjective) {
            return {std::move(cm), Label::RandomValid, std::nullopt};
        }
    }
    throw RetryExhaustedError("random valid: preconditions kept failing over 16 attempts");
}

criterion::CoordinateMatrix perturb(const criterion::CoordinateMatrix& cm, double epsilon,
                                    Seed seed) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw InvalidInputError("perturb: epsilon must be finite and >= 0");
    }
    if (epsilon == 0.0) return cm;
    rng::Xoshiro256pp r(seed.value);
    const double scale = epsilon * cm.matrix().max_norm();
    Matrix a = cm.matrix();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += scale * r.gaussian();
    return criterion::CoordinateMatrix(std::move(a));
}

}  // namespace axo::generator
