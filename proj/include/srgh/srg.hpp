#pragma once

#include <array>
#include <string>
#include <vector>

#include "srgh/quadext.hpp"

namespace srgh {

/**
 * Validated strongly-regular-graph parameter set with restricted eigenvalues
 * r > 0 > -1 > s. Parameter sets whose eigenvalues satisfy r + s <= -2 are
 * replaced by the complement tuple on construction (swapped = true), so the
 * invariant r + s >= -1 always holds; s = -1 tuples are rejected outright.
 */
struct SrgParams {
    BigInt n, k1, k2;
    BigInt lambda, mu;
    QuadExt r, s;      // real quadratic integers, rational iff the multiplicities split
    BigRational m1, m2;
    bool conference = false;
    bool swapped = false;

    BigRational rs() const;   // r*s, always rational
    BigRational rps() const;  // r+s, always rational
};

/**
 * Builds SrgParams from (n, k1, lambda, mu), normalizing by complementation
 * when r + s <= -2. Throws InfeasibleParams with a machine-readable code:
 * range, identity_violation, m_irrational, m1_not_integral (witness: the
 * exact rational m1), s_eq_minus_one, k2_lt_2.
 */
SrgParams params_from_nklm(const BigInt& n, const BigInt& k1, const BigInt& lambda, const BigInt& mu);

/** Dual checks: k1 = 2r(r+1) with r+s = -1, and m1 = m2. Asserts they agree. */
bool is_conference(const SrgParams& p);

/** First eigenmatrix: rows (1,k1,k2), (1,r,-(r+1)), (1,s,-(s+1)). */
std::array<std::array<QuadExt, 3>, 3> eigenmatrix(const SrgParams& p);

/** k2 = -k1(r+1)(s+1)/(k1+rs); throws ZeroMu when k1 + rs = 0. */
BigRational k2_from_eigen(const BigRational& k1, const QuadExt& r, const QuadExt& s);

struct FeasibilityResult {
    bool pass = true;
    std::string bound_id;  // first failed bound: s_lt_minus_one, n_bound_r, n_bound_s
    std::string detail;
};

/**
 * Necessary order bounds: s < -1, n+1 <= 4(r+1)^2 and n+1 <= 4s^2
 * (the row bounds (sum_j |P_kj|)^2 for k = 1, 2).
 */
FeasibilityResult feasibility_bounds(const SrgParams& p);

}  // namespace srgh
