#include "steinerlab/matrix.hpp"

#include <stdexcept>

namespace steinerlab {

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return {entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_};
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix m(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                m.set(i, j, Scalar(m.at(i, j) + at(i, k) * rhs.at(k, j)));
        }
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = field_.normalize(acc);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("Matrix: vstack column mismatch");
    Matrix m(field_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(rows_ + i, j, below.at(i, j));
    return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("Matrix: hstack row mismatch");
    Matrix m(field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
        for (std::size_t j = 0; j < right.cols_; ++j) m.set(i, cols_ + j, right.at(i, j));
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const FieldSpec f = m.field();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) {
                Scalar t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        Scalar invp = f.inv(a.at(r, c));
        for (std::size_t j = c; j < nc; ++j) a.set(r, j, f.mul(a.at(r, j), invp));
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Scalar factor = a.at(i, c);
            for (std::size_t j = c; j < nc; ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix rhs_col(m.field(), m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) rhs_col.set(i, 0, rhs[i]);
    RrefResult aug = rref(m.hstack(rhs_col));
    // Inconsistent iff some pivot lands in the appended column.
    for (std::size_t p : aug.pivots)
        if (p == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < aug.pivots.size(); ++i) x[aug.pivots[i]] = aug.reduced.at(i, m.cols());
    return x;
}

}  // namespace steinerlab
