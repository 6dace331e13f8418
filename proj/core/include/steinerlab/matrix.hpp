#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "steinerlab/field.hpp"

namespace steinerlab {

/// Dense exact matrix over Q or F_p. Row-major, immutable in spirit: all
/// library operations return fresh values.
class Matrix {
  public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

    static Matrix identity(FieldSpec field, std::size_t n);
    /// Builds from nested rows; entries are normalized into the field.
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) { entries_[i * cols_ + j] = field_.normalize(v); }

    std::vector<Scalar> row(std::size_t i) const;
    std::vector<Scalar> col(std::size_t j) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// Stacks rhs below (vstack) or to the right (hstack).
    Matrix vstack(const Matrix& below) const;
    Matrix hstack(const Matrix& right) const;

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    /// Row-major flattening, index = i*cols + j.
    const std::vector<Scalar>& flat() const { return entries_; }

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Canonical reduced row echelon form: pivot columns strictly increasing,
/// pivot entries 1, zeros above and below pivots. Deterministic.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some solution of m*x = rhs with free variables set to zero, or nullopt
/// if the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

}  // namespace steinerlab
