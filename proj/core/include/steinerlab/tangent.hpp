#pragma once

#include <map>

#include "steinerlab/jumping.hpp"

namespace steinerlab {

/// Bases adapted to a jumping pair Lambda = s0 (x) Gamma: v spans S* with
/// v_1 = s0, u spans H0* with u_j(gamma_i) = delta_ij for i,j <= f0 and
/// u_k(Gamma) = 0 for k > f0, so that lambda_i(u_j) = delta_ij v_1.
struct AdaptedBasis {
    Matrix v;                    // s x s, rows a basis of S*, row 0 = s0
    Matrix gamma;                // f0 x h0, rows gamma_i
    Matrix u;                    // h0 x h0, rows a basis of H0*
    std::vector<Matrix> lambda;  // f0 slices s x h0, lambda_i = s0 (x) gamma_i
};

AdaptedBasis adapted_basis(const SteinerDatum& datum, const JumpingPair& pair);

struct TangentReport {
    JumpingPair pair;
    int ambient_dim = 0;  // f0 * (t0 - f0)
    int tangent_dim = 0;
    int upper_bound = 0;
    bool at_bound = false;  // locus dimension estimate equals upper_bound; filled by the classify path
    bool auto_reduced = false;
};

/// Dimension of the solution space of the tangent linear system at the pair:
/// psi in Hom(Lambda, T*/Lambda) with (psi(lambda_i))(ker lambda_i) inside
/// <v_1> and the pairwise congruences mod v_1. Auto-reduces the datum with a
/// flag unless strict; lift_seed != 0 perturbs the complement representatives
/// by Lambda-components (the dimension must not change).
TangentReport tangent_dimension(const SteinerDatum& datum, const JumpingPair& pair,
                                bool strict = false, unsigned long lift_seed = 0);

/// Tangent-space bound f0*(t - dim sigma(X) - f0*s + 1) for a reduced datum;
/// throws otherwise.
int upper_bound_dim(const SteinerDatum& datum);

/// One step of the induction: quotients the source by Lambda and S* by <s0>,
/// giving s' = s-1 and t' = t0 - f0 before reduction; the result is reduced.
SteinerDatum induction_step(const SteinerDatum& datum, const JumpingPair& pair);

enum class ClassCase { Trivial, CaseI, CaseII, CaseIII, CaseIV, CaseV, Unclassified };

std::string class_case_name(ClassCase c);

struct ClassificationVerdict {
    ClassCase verdict = ClassCase::Unclassified;
    std::vector<ClassCase> matched;  // every case whose predicates passed
    std::map<std::string, std::string> evidence;
    std::string triple_description;
};

/// Decision table for maximal-dimension jumping loci. Requires a reduced
/// datum and locus reports from at least two primes.
ClassificationVerdict classify_maximal(const SteinerDatum& datum,
                                       const std::vector<LocusReport>& locus_reports,
                                       const std::vector<TangentReport>& tangents);

}  // namespace steinerlab
