#pragma once

#include "steinerlab/subspace.hpp"

namespace steinerlab {

/// A subspace T0* of the tensor space S* (x) H0, whose elements are viewed
/// as s x h0 matrices. Flattening is row-major: index = i*h0 + j.
class MatrixSpace {
  public:
    /// Extracts a canonical basis (RREF of the flattened generators).
    static MatrixSpace from_generators(FieldSpec field, std::size_t s, std::size_t h0,
                                       const std::vector<Matrix>& generators);
    static MatrixSpace full(FieldSpec field, std::size_t s, std::size_t h0);

    FieldSpec field() const { return flattened_.field(); }
    std::size_t s() const { return s_; }
    std::size_t h0() const { return h0_; }
    std::size_t dim() const { return flattened_.rows(); }

    /// Basis slices, the unflattened rows of flattened().
    const std::vector<Matrix>& basis() const { return basis_; }
    /// Canonical RREF basis, dim x (s*h0).
    const Matrix& flattened() const { return flattened_; }

    bool contains_flat(const std::vector<Scalar>& v) const;
    bool contains(const Matrix& slice) const;

  private:
    MatrixSpace(std::size_t s, std::size_t h0, Matrix flattened);
    std::size_t s_, h0_;
    Matrix flattened_;
    std::vector<Matrix> basis_;
};

/// Reshapes the t columns of phi (each of length s*h0) into s x h0 slices
/// and returns a basis of their span (the image T0* of phi).
MatrixSpace slices_of_phi(const Matrix& phi, std::size_t s, std::size_t h0);

/// The fiber B_{s0} = {b in k^h0 : s0 (x) b lies in the space}. Solved as one
/// joint system in (b, coefficients) of size (s*h0) x (h0 + dim).
Subspace contract_line(const MatrixSpace& space, const std::vector<Scalar>& s0);

/// True iff every a_i (x) b_j over canonical bases of A and B flattens into
/// the space.
bool is_pure_in(const MatrixSpace& space, const Subspace& a, const Subspace& b);

struct GaussianCount {
    long q;
    long n, k;
    mpz_class value;
};

/// [n choose k]_q, the number of k-dimensional subspaces of F_q^n.
GaussianCount gaussian_binomial(long n, long k, long q);

/// Flattens an s x h0 slice row-major.
std::vector<Scalar> flatten_slice(const Matrix& slice);
/// Outer product s0 * b^T as an s x h0 slice.
Matrix outer(FieldSpec field, const std::vector<Scalar>& s0, const std::vector<Scalar>& b);

}  // namespace steinerlab
