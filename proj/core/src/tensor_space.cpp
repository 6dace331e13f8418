#include "steinerlab/tensor_space.hpp"

#include <stdexcept>

namespace steinerlab {

std::vector<Scalar> flatten_slice(const Matrix& slice) { return slice.flat(); }

Matrix outer(FieldSpec field, const std::vector<Scalar>& s0, const std::vector<Scalar>& b) {
    Matrix m(field, s0.size(), b.size());
    for (std::size_t i = 0; i < s0.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m.set(i, j, Scalar(s0[i] * b[j]));
    return m;
}

MatrixSpace::MatrixSpace(std::size_t s, std::size_t h0, Matrix flattened)
    : s_(s), h0_(h0), flattened_(std::move(flattened)) {
    basis_.reserve(flattened_.rows());
    for (std::size_t r = 0; r < flattened_.rows(); ++r) {
        Matrix slice(flattened_.field(), s_, h0_);
        for (std::size_t i = 0; i < s_; ++i)
            for (std::size_t j = 0; j < h0_; ++j) slice.set(i, j, flattened_.at(r, i * h0_ + j));
        basis_.push_back(std::move(slice));
    }
}

MatrixSpace MatrixSpace::from_generators(FieldSpec field, std::size_t s, std::size_t h0,
                                         const std::vector<Matrix>& generators) {
    Matrix stacked(field, generators.size(), s * h0);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].rows() != s || generators[g].cols() != h0)
            throw std::invalid_argument("MatrixSpace: generator shape mismatch");
        const auto flat = generators[g].flat();
        for (std::size_t k = 0; k < flat.size(); ++k) stacked.set(g, k, flat[k]);
    }
    RrefResult r = rref(stacked);
    Matrix basis(field, r.rank, s * h0);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < s * h0; ++j) basis.set(i, j, r.reduced.at(i, j));
    return MatrixSpace(s, h0, std::move(basis));
}

MatrixSpace MatrixSpace::full(FieldSpec field, std::size_t s, std::size_t h0) {
    return MatrixSpace(s, h0, Matrix::identity(field, s * h0));
}

bool MatrixSpace::contains_flat(const std::vector<Scalar>& v) const {
    if (v.size() != s_ * h0_) throw std::invalid_argument("MatrixSpace: flat vector length mismatch");
    return rank(flattened_.vstack(Matrix::from_rows(field(), {v}))) == dim();
}

bool MatrixSpace::contains(const Matrix& slice) const { return contains_flat(slice.flat()); }

MatrixSpace slices_of_phi(const Matrix& phi, std::size_t s, std::size_t h0) {
    if (phi.rows() != s * h0) throw std::invalid_argument("slices_of_phi: phi must have s*h0 rows");
    std::vector<Matrix> slices;
    slices.reserve(phi.cols());
    for (std::size_t c = 0; c < phi.cols(); ++c) {
        Matrix slice(phi.field(), s, h0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < h0; ++j) slice.set(i, j, phi.at(i * h0 + j, c));
        slices.push_back(std::move(slice));
    }
    return MatrixSpace::from_generators(phi.field(), s, h0, slices);
}

Subspace contract_line(const MatrixSpace& space, const std::vector<Scalar>& s0) {
    if (s0.size() != space.s()) throw std::invalid_argument("contract_line: s0 length mismatch");
    bool all_zero = true;
    for (const auto& e : s0)
        if (e != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("contract_line: s0 must be nonzero");

    const FieldSpec f = space.field();
    const std::size_t s = space.s(), h0 = space.h0(), t0 = space.dim();
    // Rows indexed by tensor coordinates (i,j); unknowns are (b, c) with
    // s0_i b_j - sum_k c_k (M_k)_{ij} = 0.
    Matrix system(f, s * h0, h0 + t0);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < h0; ++j) {
            system.set(i * h0 + j, j, s0[i]);
            for (std::size_t k = 0; k < t0; ++k)
                system.set(i * h0 + j, h0 + k, f.neg(space.basis()[k].at(i, j)));
        }
    Subspace joint = kernel(system);
    // Project onto the b-block; the c-part is determined by b since the
    // basis slices are independent.
    Matrix b_part(f, joint.dim(), h0);
    for (std::size_t r = 0; r < joint.dim(); ++r)
        for (std::size_t j = 0; j < h0; ++j) b_part.set(r, j, joint.basis().at(r, j));
    return Subspace::from_spanning(b_part);
}

bool is_pure_in(const MatrixSpace& space, const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != space.s() || b.ambient_dim() != space.h0())
        throw std::invalid_argument("is_pure_in: ambient dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            Matrix prod = outer(space.field(), a.basis().row(i), b.basis().row(j));
            if (!space.contains(prod)) return false;
        }
    return true;
}

GaussianCount gaussian_binomial(long n, long k, long q) {
    if (!is_prime(q)) throw std::invalid_argument("gaussian_binomial: q must be prime");
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("gaussian_binomial: require 0 <= k <= n");
    mpz_class qz(q), num(1), den(1);
    for (long i = 0; i < k; ++i) {
        mpz_class qn, qk;
        mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(qk.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(k - i));
        num *= qn - 1;
        den *= qk - 1;
    }
    return GaussianCount{q, n, k, mpz_class(num / den)};
}

}  // namespace steinerlab
