#pragma once

#include <optional>

#include "srgh/poly.hpp"
#include "srgh/srg.hpp"

namespace srgh {

/**
 * The cubic L, the cubic M = L - 4(X + rs)^2 and the quartic S controlling
 * the sandwich condition M(k1) <= ±sqrt(S(k1))/2 <= L(k1), together with
 * their values at X = k1 and the recurring critical quantities.
 */
struct LmsEvaluation {
    RatPoly L, M, S;
    BigRational Lk, Mk, Sk;  // values at X = k1
    BigRational k1;
    BigRational rs, rps;     // elementary symmetric functions of r, s
    BigRational T;           // r(r+1)s(s+1)
    QuadExt h;               // sqrt(4T + 1)
    QuadExt beta_plus;       // -rs - 1/2 + h/2
    QuadExt delta;           // -rs + sqrt(T)
};

struct LmsForms {
    RatPoly L, M, S;
};

/** General closed forms from the symmetric functions e1 = r+s, e2 = rs. */
LmsForms lms_general(const BigRational& r, const BigRational& s);

/** r + s = -1 specialization, written in rho = r(r+1) (rational even for irrational r). */
LmsForms lms_conference(const BigRational& rho);

/** s = -r specialization: monic factored closed forms. */
LmsForms lms_rs0(const BigRational& r);

/** Evaluates the forms for a parameter set at X = k1 (conference-safe). */
LmsEvaluation lms_at_k1(const SrgParams& p);

/** As above for a free rational eigenvalue pair and evaluation point. */
LmsEvaluation lms_at_point(const BigRational& r, const BigRational& s, const BigRational& x);

/**
 * Critical points of the sandwich geometry for rational (r, s):
 * alpha± and gamma± (present only when real), beta±, delta, h.
 */
struct CriticalPoints {
    QuadExt h;
    std::optional<QuadExt> alpha_minus, alpha_plus;
    QuadExt beta_minus, beta_plus;
    std::optional<QuadExt> gamma_minus, gamma_plus;
    QuadExt delta;
};

CriticalPoints critical_points(const BigRational& r, const BigRational& s);

/**
 * The rational quadratics with roots {alpha±}, {beta±}, {gamma±}, {beta±+1};
 * they satisfy L^2 - S/4 = Qalpha * Qbeta^2 and M^2 - S/4 = Qgamma * Qbeta1^2.
 */
struct CriticalQuadratics {
    RatPoly Qalpha, Qbeta, Qgamma, Qbeta1;
};

CriticalQuadratics critical_quadratics(const BigRational& r, const BigRational& s);

}  // namespace srgh
