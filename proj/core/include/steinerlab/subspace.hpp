#pragma once

#include "steinerlab/matrix.hpp"

namespace steinerlab {

/// A linear subspace of k^n in canonical form: the basis rows are the nonzero
/// rows of the RREF of any spanning set. Two Subspace values are equal as
/// sets iff their bases are entrywise equal.
class Subspace {
  public:
    static Subspace from_spanning(const Matrix& spanning_rows);
    static Subspace zero(FieldSpec field, std::size_t ambient_dim);
    static Subspace full(FieldSpec field, std::size_t ambient_dim);

    FieldSpec field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }

    /// Canonical RREF basis, one vector per row. No zero rows.
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

    /// Strict total order on canonical bases, for deterministic sets.
    bool operator<(const Subspace& rhs) const;

  private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

/// Kernel {v : m v = 0} as a canonical subspace of k^cols.
Subspace kernel(const Matrix& m);

}  // namespace steinerlab
