#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srgh/hadamard.hpp"
#include "srgh/lms.hpp"

namespace srgh {

enum class SolveBranch { plus, minus };
inline const char* branch_name(SolveBranch b) { return b == SolveBranch::plus ? "plus" : "minus"; }

struct SignFilterOutcome {
    bool s_nonneg = false;   // S(k1) >= 0
    bool plus_ok = false;    // M(k1) <= +sqrt(S)/2 <= L(k1)
    bool minus_ok = false;   // M(k1) <= -sqrt(S)/2 <= L(k1)
    QuadExt sqrt_s;          // sqrt(S(k1)) when s_nonneg
};

SignFilterOutcome sign_filter(const LmsEvaluation& e);

/** a1 = (-(L+M) ± sqrt(S)) / (L - M) at X = k1; DegenerateQuadratic when L = M. */
QuadExt solve_a1(const LmsEvaluation& e, SolveBranch branch);

/**
 * The two linear relations determining a0 and a2 from a1 at X = k1.
 * SingularLinearSolve when rs = 0, k1 + rs = 0 or r(r+1)s(s+1) = 0.
 */
std::pair<QuadExt, QuadExt> solve_a0_a2(const LmsEvaluation& e, const QuadExt& a1);

struct CandidateSolution {
    CoreWeights w;
    std::array<int, 3> eps{0, 0, 0};  // signs of the imaginary parts
    BigInt discriminant;              // shared weight-field discriminant
    bool verified = false;            // passed verify_spectral
    std::string family = "unlisted";  // matched closed-form family
};

/**
 * Lifts real parts (a0, a1, a2) to unit-circle weight triples: imaginary
 * parts b_j = ±sqrt(1 - a_j^2), all nonzero 1 - a_j^2 must share one
 * squarefree part (MixedDiscriminants otherwise); every sign pattern is
 * kept iff e_0, e_1, e_2 all vanish and w1 != w2.
 */
std::vector<CandidateSolution> lift_to_unit_circle(const SrgParams& p, const QuadExt& a0,
                                                   const QuadExt& a1, const QuadExt& a2);

struct BranchData {
    std::string branch;
    QuadExt a1, a0, a2;
};

struct ClassificationReport {
    std::optional<SrgParams> params;       // absent when construction rejected the tuple
    std::array<BigInt, 4> input{};         // n, k1, lambda, mu as given
    std::string rejection_code, rejection_witness;
    std::vector<std::string> filters;      // pipeline filters that fired, in order
    std::vector<BranchData> branches;      // surviving branches with solved real parts
    std::vector<CandidateSolution> solutions;
    std::vector<std::string> oracle_families;  // closed-form expectation

    bool rejected() const { return !params.has_value(); }
};

/** Closed-form solution list for the parameters (the classification target). */
std::vector<std::pair<std::string, CoreWeights>> theorem_oracle(const SrgParams& p);

/** Full pipeline: bounds, sandwich filter, a1 roots, linear solve, lift, verify. */
ClassificationReport classify_params(const SrgParams& p);

/** classify_params plus construction; rejections become reports, not errors. */
ClassificationReport classify_tuple(const BigInt& n, const BigInt& k1, const BigInt& lambda,
                                    const BigInt& mu);

struct ScanResult {
    std::vector<ClassificationReport> reports;  // feasible tuples, sorted by (n, k1)
    long tuples_examined = 0;                   // candidate tuples passing integrality gates
    long feasible = 0;
};

/**
 * Enumerates all parameter tuples with 5 <= n <= n_max (deduplicated under
 * complementation) and classifies each feasible one, checking every report
 * against the closed-form list; a disagreement throws OracleMismatch.
 */
ScanResult scan(long n_max, int jobs = 1);

}  // namespace srgh
