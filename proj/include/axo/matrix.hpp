#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "axo/error.hpp"

namespace axo::linalg {

/// Dense real vector. Plain value type; entries are owned and contiguous.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim, 0.0) {}
    Vector(std::initializer_list<double> entries) : entries_(entries) {}
    explicit Vector(std::vector<double> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }

    std::span<const double> entries() const { return entries_; }
    const std::vector<double>& data() const { return entries_; }

    bool operator==(const Vector&) const = default;

private:
    std::vector<double> entries_;
};

/// Dense row-major real matrix for small problems (dimensions up to ~64).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    /// Builds a matrix from row lists; all rows must have equal length.
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static Matrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Matrix transposed() const;

    /// Largest absolute entry; 0 for an empty matrix.
    double max_norm() const;
    double frobenius_norm() const;

    std::span<const double> entries() const { return entries_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

/// b * b^T, computed on the upper triangle and mirrored so the result is
/// symmetric by construction.
Matrix gram(const Matrix& b);

Vector apply(const Matrix& a, const Vector& x);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);

/// Throws InvalidInputError if any entry is NaN or infinite.
void require_finite(const Matrix& a, const char* what);
void require_finite(const Vector& a, const char* what);

}  // namespace axo::linalg
