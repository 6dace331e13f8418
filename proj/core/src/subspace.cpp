#include "steinerlab/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace steinerlab {

Subspace Subspace::from_spanning(const Matrix& spanning_rows) {
    RrefResult r = rref(spanning_rows);
    Matrix basis(spanning_rows.field(), r.rank, spanning_rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < spanning_rows.cols(); ++j) basis.set(i, j, r.reduced.at(i, j));
    return Subspace(std::move(basis));
}

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
    return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
    return Subspace(Matrix::identity(field, ambient_dim));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    Matrix candidate = basis_.vstack(Matrix::from_rows(field(), {v}));
    return rank(candidate) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    return rank(basis_.vstack(other.basis_)) == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    return from_spanning(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    // x in U cap V iff x = U^T a = V^T b; solve [U^T | -V^T] z = 0 and map
    // the a-part back through U^T.
    const FieldSpec f = field();
    Matrix ut = basis_.transpose();
    Matrix vt = other.basis_.transpose();
    Matrix neg_vt(f, vt.rows(), vt.cols());
    for (std::size_t i = 0; i < vt.rows(); ++i)
        for (std::size_t j = 0; j < vt.cols(); ++j) neg_vt.set(i, j, f.neg(vt.at(i, j)));
    Subspace z = kernel(ut.hstack(neg_vt));
    Matrix vectors(f, z.dim(), ambient_dim());
    for (std::size_t r = 0; r < z.dim(); ++r) {
        std::vector<Scalar> a(dim());
        for (std::size_t j = 0; j < dim(); ++j) a[j] = z.basis().at(r, j);
        std::vector<Scalar> x = ut.apply(a);
        for (std::size_t j = 0; j < ambient_dim(); ++j) vectors.set(r, j, x[j]);
    }
    return from_spanning(vectors);
}

bool Subspace::operator<(const Subspace& rhs) const {
    if (dim() != rhs.dim()) return dim() < rhs.dim();
    for (std::size_t k = 0; k < basis_.flat().size(); ++k) {
        int c = cmp(basis_.flat()[k], rhs.basis_.flat()[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const FieldSpec f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> vecs;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, free));
        vecs.push_back(std::move(v));
    }
    if (vecs.empty()) return Subspace::zero(f, m.cols());
    return Subspace::from_spanning(Matrix::from_rows(f, vecs));
}

}  // namespace steinerlab
