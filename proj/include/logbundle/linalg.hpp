#pragma once

#include "logbundle/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace logbundle {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Builds from nested rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] Vector row(std::size_t i) const;
    [[nodiscard]] Vector apply(const Vector& v) const;
    [[nodiscard]] Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form. Pivots are chosen as the first nonzero
/// entry in column order, so results are reproducible bit for bit.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical basis of {v : m v = 0}: one vector per free column f of the
/// RREF, with 1 in position f and zeros in the other free positions.
std::vector<Vector> nullspace(const Matrix& m);

/// Particular solution of m x = b with free variables set to zero, or
/// std::nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Incrementally built row space. insert() reports whether the vector was
/// independent of everything inserted before; used for deterministic
/// complement selection.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    bool insert(const Vector& v);
    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }

private:
    struct Row {
        std::size_t pivot;
        std::vector<mpz_class> entries;
        std::vector<std::size_t> nonzero;
    };
    std::vector<mpz_class> reduce(const Vector& v) const;

    std::size_t dim_;
    std::vector<Row> rows_;  // kept sorted by pivot
};

}  // namespace logbundle
