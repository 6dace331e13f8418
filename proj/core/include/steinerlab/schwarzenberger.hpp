#pragma once

#include "steinerlab/steiner.hpp"

namespace steinerlab {

/// The 3-tensor of a multiplication map H0(L) (x) H0(psi* U^v) -> H0(L (x) psi* U^v):
/// entry(i,j,m) is the coefficient of the m-th target basis section in the
/// product of source sections i and j.
struct MultiplicationTensor {
    FieldSpec field;
    std::size_t sL = 0, sU = 0, sLU = 0;
    std::vector<Scalar> entries;  // index ((i*sU)+j)*sLU + m

    MultiplicationTensor(FieldSpec f, std::size_t sl, std::size_t su, std::size_t slu)
        : field(f), sL(sl), sU(su), sLU(slu), entries(sl * su * slu, Scalar(0)) {}

    const Scalar& at(std::size_t i, std::size_t j, std::size_t m) const {
        return entries[(i * sU + j) * sLU + m];
    }
    void set(std::size_t i, std::size_t j, std::size_t m, const Scalar& v) {
        entries[(i * sU + j) * sLU + m] = field.normalize(v);
    }

    /// The (sL*sU) x sLU flattening; surjectivity of the multiplication map
    /// means this has rank sLU.
    Matrix flattened() const;
    bool is_surjective() const { return rank(flattened()) == sLU; }
};

/// Monomial convolution tensor of binary forms: H0(O_P1(a)) (x) H0(O_P1(n))
/// -> H0(O_P1(a+n)), entry(i,j,m) = 1 iff i+j = m.
MultiplicationTensor binary_tensor(int a, int n, FieldSpec field);

/// Symmetric multiplication H0(O_P2(1)) (x) H0(O_P2(1)) -> H0(O_P2(2)) with
/// degree-lex monomial bases.
MultiplicationTensor veronese_tensor(FieldSpec field);

/// Block-diagonal tensor of two binary families with a common L = O_P1(a):
/// the section-space model of a rational normal scroll.
MultiplicationTensor scroll_tensor(int a, int n1, int n2, FieldSpec field);

/// The classical family: Z = P^1, L = O(a), psi given by O(n), f0 = 1,
/// X = P^n. phi has the Hankel/convolution structure; the probe carries a
/// built-in grid of sample points of P^n.
SteinerDatum binary_mult_datum(int a, int n, FieldSpec field);

/// Veronese family datum on X = P^2 (s = 3, h0 = 3, t = 6, f0 = 1).
SteinerDatum veronese_datum(FieldSpec field);

/// Scroll family datum via the generic entry point (f0 = 2, Z = X = P^1).
SteinerDatum scroll_datum(int a, int n1, int n2, FieldSpec field);

/// Generic entry point: s = sL, h0 = sU, t = sLU, phi the dual (transpose
/// over the (i,j) <-> m pairing) of the tensor. Throws if the tensor is not
/// surjective or validation fails at a probe point.
SteinerDatum generic_schwarzenberger_datum(const MultiplicationTensor& tensor, int f0,
                                           const VarietyProbe& probe, FieldSpec field);

/// Reads phi of a builder-produced datum back as a 3-tensor.
MultiplicationTensor tensor_from_datum(const SteinerDatum& datum);

/// Pointwise injectivity of eta, equivalent to fiberwise surjectivity of phi;
/// kept as a named alias for the construction's key check.
ValidationReport eta_injectivity_check(const SteinerDatum& datum);

/// Built-in probe grid of P^n: over Q, coordinate points, pairwise sums and
/// the all-ones point; over F_p, all of P^n(F_p) when small enough, else a
/// seeded sample.
std::vector<std::vector<Scalar>> projective_grid(FieldSpec field, int n);

}  // namespace steinerlab
