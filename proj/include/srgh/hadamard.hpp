#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srgh/graphs.hpp"

namespace srgh {

/**
 * Weights attached to the three relations (identity, adjacency,
 * non-adjacency). Each must have unit modulus, all three must live in one
 * imaginary-or-rational quadratic field, and w1 != w2.
 */
struct CoreWeights {
    QuadExt w0, w1, w2;

    void validate() const;           // throws Error on violation
    BigInt discriminant() const;     // the common d (0 when all rational)
};

/** Dense complex matrix with entries in a single quadratic field. */
struct ComplexMatrix {
    int n = 0;
    std::vector<QuadExt> e;

    const QuadExt& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
    QuadExt& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
};

/** Core w0*A0 + w1*A1 + w2*A2 over the graph's relations. */
ComplexMatrix build_core(const RelationMatrix& g, const CoreWeights& w);

/** Adds the all-ones border row and column in front of the core. */
ComplexMatrix build_bordered(const ComplexMatrix& core);

struct GramOutcome {
    bool ok = true;
    int i = -1, j = -1;   // first violating pair
    QuadExt inner;        // its Hermitian inner product
    std::string expected; // what the entry should have been
};

/** Checks W * conj(W)^T = N I exactly, N the order of W. */
GramOutcome verify_gram(const ComplexMatrix& w);

/**
 * Eigenvalue data of a d-class symmetric association scheme: valencies
 * k_0..k_d (k_0 = 1) and the first eigenmatrix P with P[0][j] = k_j.
 */
struct SchemeData {
    int d = 0;
    std::vector<BigRational> k;
    std::vector<std::vector<QuadExt>> P;

    BigRational order() const;  // n = sum k_j
};

SchemeData scheme_from_params(const SrgParams& p);

/**
 * beta_k = sum_j w_j P[k][j]. Throws IncompatibleField when the eigenvalues
 * and the weights live in genuinely different irrational fields.
 */
QuadExt beta(const SchemeData& sc, const std::vector<QuadExt>& w, int k);

/** |beta_k|^2 for unit-modulus weights, computed inside the eigenvalue field. */
QuadExt beta_abs_sq(const SchemeData& sc, const std::vector<QuadExt>& w, int k);

struct SpectralOutcome {
    bool ok = true;
    int k = -1;
    std::string which;  // "row_sum" or "modulus"
    QuadExt value;      // the offending exact value (e_0, or |beta_k|^2 - (n+1))
};

/**
 * Border conditions for a unit-weight core: 1 + sum_j k_j w_j = 0 and
 * |beta_k|^2 = n+1 for k = 1..d. Reports the first failure.
 */
SpectralOutcome verify_spectral(const SchemeData& sc, const std::vector<QuadExt>& w);

/**
 * e_k = (prod_h w_h) * (|beta_k|^2 - (n+1)) for k >= 1, and
 * e_0 = 1 + sum_j k_j w_j. Exact; throws IncompatibleField when the value is
 * nonzero and genuinely lives outside every quadratic field.
 */
QuadExt eval_ek(const SchemeData& sc, const std::vector<QuadExt>& w, int k);

/** Whether e_k vanishes (single-field computation, never throws for unit w). */
bool ek_vanishes(const SchemeData& sc, const std::vector<QuadExt>& w, int k);

enum class WeightFamily { ia_plus, ia_minus, ib_plus, ib_minus, ii };

WeightFamily family_from_string(const std::string& name);
std::string family_name(WeightFamily f);

/**
 * Closed-form weight triples: for conference parameters the families
 * (-1, ±i, ∓i) and (1, (-1 ± i sqrt(k1^2-1))/k1, conj); for k1 = 2r^2 with
 * s = -r the triple (1, -1, 1). Throws FamilyNotApplicable otherwise.
 */
CoreWeights theorem_weights(const SrgParams& p, WeightFamily f);

/** All families applicable to the given parameters, with their weights. */
std::vector<std::pair<WeightFamily, CoreWeights>> applicable_families(const SrgParams& p);

}  // namespace srgh
