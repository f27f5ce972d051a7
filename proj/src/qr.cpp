#include "axo/qr.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace axo::linalg {

namespace {

// Householder reflectors stored as unit-scaled vectors v with factor beta;
// H = I - beta v v^T acts on rows k.. of the working matrix.
struct Reflector {
    std::vector<double> v;  // length d, zero above index k
    double beta = 0.0;
    std::size_t k = 0;
};

void apply_reflector_to_matrix(const Reflector& h, Matrix& m) {
    if (h.beta == 0.0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = h.k; i < m.rows(); ++i) s += h.v[i] * m(i, j);
        s *= h.beta;
        for (std::size_t i = h.k; i < m.rows(); ++i) m(i, j) -= s * h.v[i];
    }
}

void apply_reflector_to_vector(const Reflector& h, std::vector<double>& x) {
    if (h.beta == 0.0) return;
    double s = 0.0;
    for (std::size_t i = h.k; i < x.size(); ++i) s += h.v[i] * x[i];
    s *= h.beta;
    for (std::size_t i = h.k; i < x.size(); ++i) x[i] -= s * h.v[i];
}

// Builds the reflector mapping column k of m (rows k..) onto +-||x|| e_k,
// and applies it. Returns a zero-beta reflector for an already-zero column.
Reflector make_reflector(Matrix& m, std::size_t k) {
    const std::size_t d = m.rows();
    Reflector h;
    h.k = k;
    h.v.assign(d, 0.0);
    double norm2 = 0.0;
    for (std::size_t i = k; i < d; ++i) {
        h.v[i] = m(i, k);
        norm2 += h.v[i] * h.v[i];
    }
    const double alpha = std::sqrt(norm2);
    if (alpha == 0.0) return h;
    const double sign = (h.v[k] >= 0.0) ? 1.0 : -1.0;
    h.v[k] += sign * alpha;
    double vnorm2 = norm2 - m(k, k) * m(k, k) + h.v[k] * h.v[k];
    if (vnorm2 == 0.0) return h;
    h.beta = 2.0 / vnorm2;
    apply_reflector_to_matrix(h, m);
    m(k, k) = -sign * alpha;  // exact value; kills rounding noise below the diagonal
    for (std::size_t i = k + 1; i < d; ++i) m(i, k) = 0.0;
    return h;
}

void back_substitute(const Matrix& r, std::vector<double>& y) {
    const std::size_t d = r.rows();
    for (std::size_t ii = d; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t j = ii + 1; j < d; ++j) s -= r(ii, j) * y[j];
        y[ii] = s / r(ii, ii);
    }
}

}  // namespace

QrFactors householder_qr(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("qr: matrix is not square");
    const std::size_t d = a.rows();
    Matrix r = a;
    std::vector<Reflector> hs;
    hs.reserve(d);
    for (std::size_t k = 0; k + 1 < d; ++k) hs.push_back(make_reflector(r, k));

    // Q = H_1 ... H_{d-1}; build column by column.
    Matrix q(d, d);
    std::vector<double> e(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        for (std::size_t k = hs.size(); k-- > 0;) apply_reflector_to_vector(hs[k], e);
        for (std::size_t i = 0; i < d; ++i) q(i, j) = e[i];
    }
    return {std::move(q), std::move(r)};
}

Matrix invert(const Matrix& a, double tau_rank) {
    if (a.rows() != a.cols()) throw DimensionError("invert: matrix is not square");
    const std::size_t d = a.rows();
    if (d == 0) return a;

    Matrix r = a;
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Reflector> hs;
    hs.reserve(d);

    for (std::size_t k = 0; k < d; ++k) {
        // Column pivoting: bring the remaining column of largest norm to position k.
        std::size_t best = k;
        double best_norm = -1.0;
        for (std::size_t j = k; j < d; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < d; ++i) s += r(i, j) * r(i, j);
            if (s > best_norm) {
                best_norm = s;
                best = j;
            }
        }
        if (best != k) {
            for (std::size_t i = 0; i < d; ++i) std::swap(r(i, k), r(i, best));
            std::swap(perm[k], perm[best]);
        }
        if (k + 1 < d) {
            hs.push_back(make_reflector(r, k));
        }
    }

    const double r00 = std::abs(r(0, 0));
    for (std::size_t k = 0; k < d; ++k) {
        if (std::abs(r(k, k)) <= tau_rank * r00 || r(k, k) == 0.0) {
            throw SingularMatrixError("invert: matrix is singular within tolerance");
        }
    }

    // A P = Q R, so A^{-1} = P R^{-1} Q^T; solve column by column.
    Matrix x(d, d);
    std::vector<double> y(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::fill(y.begin(), y.end(), 0.0);
        y[j] = 1.0;
        for (const auto& h : hs) apply_reflector_to_vector(h, y);
        back_substitute(r, y);
        for (std::size_t i = 0; i < d; ++i) x(perm[i], j) = y[i];
    }
    return x;
}

Matrix orthonormal_kernel_basis(const Vector& a0) {
    const std::size_t d = a0.dim();
    const double len = norm(a0);
    if (len == 0.0 || d == 0) throw InvalidInputError("kernel basis: zero vector");

    // w = a0/||a0|| + sign(u_0) e_0; the reflection I - 2 w w^T / (w.w) sends
    // the unit vector to -sign(u_0) e_0, so its images of e_1..e_{d-1} span
    // the complement. w.w = 2 + 2|u_0| never cancels.
    std::vector<double> w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = a0[i] / len;
    const double sign = (w[0] >= 0.0) ? 1.0 : -1.0;
    w[0] += sign;
    double wn2 = 0.0;
    for (double v : w) wn2 += v * v;

    Matrix basis(d - 1, d);
    for (std::size_t j = 1; j < d; ++j) {
        const double f = 2.0 * w[j] / wn2;
        for (std::size_t i = 0; i < d; ++i) basis(j - 1, i) = -f * w[i];
        basis(j - 1, j) += 1.0;
    }
    // Fix each row's overall sign: first nonzero entry positive. Zeros are
    // structural here (they come from zero components of a0), so the rule is
    // stable.
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (basis(i, j) == 0.0) continue;
            if (basis(i, j) < 0.0) {
                for (std::size_t k = 0; k < d; ++k) basis(i, k) = -basis(i, k);
            }
            break;
        }
    }
    return basis;
}

}  // namespace axo::linalg
