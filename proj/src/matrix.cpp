#include "axo/matrix.hpp"

#include <cmath>

namespace axo::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix entry count does not match rows*cols");
    }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw DimensionError("ragged row list");
        std::size_t j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Vector Matrix::row(std::size_t i) const {
    Vector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_norm() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("dimension mismatch in matrix product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix gram(const Matrix& b) {
    Matrix g(b.rows(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = i; j < b.rows(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < b.cols(); ++k) s += b(i, k) * b(j, k);
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    return g;
}

Vector apply(const Matrix& a, const Vector& x) {
    if (a.cols() != x.dim()) throw DimensionError("dimension mismatch in matrix-vector product");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double dot(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in dot product");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

void require_finite(const Matrix& a, const char* what) {
    for (double v : a.entries()) {
        if (!std::isfinite(v)) throw InvalidInputError(std::string(what) + ": non-finite entry");
    }
}

void require_finite(const Vector& a, const char* what) {
    for (double v : a.entries()) {
        if (!std::isfinite(v)) throw InvalidInputError(std::string(what) + ": non-finite entry");
    }
}

}  // namespace axo::linalg
