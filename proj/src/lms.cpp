#include "srgh/lms.hpp"

namespace srgh {

namespace {

RatPoly square_shift(const BigRational& c) {
    // (X + c)^2
    return RatPoly({c * c, 2 * c, BigRational(1)});
}

LmsForms forms_from_symmetric(const BigRational& e1, const BigRational& e2) {
    LmsForms f;
    f.L = RatPoly({e2 * (e1 * e1 + 4 * e2 + 2 * e1 + 2) / 2,
                   (-4 * e2 * (e1 - 1) + 1) / 2,
                   (4 * e2 - e1 + 3) / 2,
                   BigRational(1)});
    f.M = f.L - square_shift(e2).scaled(4);
    return f;
}

}  // namespace

LmsForms lms_general(const BigRational& r, const BigRational& s) {
    BigRational e1 = r + s, e2 = r * s;
    LmsForms f = forms_from_symmetric(e1, e2);
    BigRational s4 = (r + s + 1) * (r + s + 1);
    BigRational s3 = 4 * s * r * r * r + 8 * s * (s + 1) * r * r +
                     (4 * s * s * s + 8 * s * s + 8 * s + 2) * r + 2 * s + 2;
    BigRational s2 = 2 * s * (2 * s - 1) * r * r * r * r + 2 * s * (s + 1) * (4 * s - 3) * r * r * r +
                     2 * s * (2 * s * s * s + s * s + 6 * s + 4) * r * r -
                     2 * s * (s + 1) * (s * s + 2 * s - 6) * r + 1;
    BigRational s1 = -2 * r * s *
                     (2 * s * r * r * r * r + 6 * s * (s + 1) * r * r * r +
                      (6 * s * s * s - 4 * s * s - 8 * s - 1) * r * r +
                      2 * (s + 1) * (s * s * s + 2 * s * s - 6 * s - 1) * r - s * s - 2 * s - 2);
    BigRational s0 = r * r * s * s *
                     (r * r * r * r + 4 * (s + 1) * r * r * r + (22 * s * s + 28 * s + 8) * r * r +
                      4 * (s + 1) * (s * s + 6 * s + 2) * r +
                      (s * s + 2 * s + 2) * (s * s + 2 * s + 2));
    f.S = RatPoly({s0, s1, s2, s3, s4});
    return f;
}

LmsForms lms_conference(const BigRational& rho) {
    LmsForms f;
    f.L = RatPoly({rho * (4 * rho - 1) / 2, -(8 * rho - 1) / 2, -2 * (rho - 1), BigRational(1)});
    f.M = f.L - square_shift(-rho).scaled(4);
    RatPoly S1({16 * rho * rho * rho + rho, -(16 * rho * rho + 1), 4 * rho});
    f.S = -(RatPoly({-rho, BigRational(1)}) * S1);
    return f;
}

LmsForms lms_rs0(const BigRational& r) {
    BigRational bp = 2 * r * r - 1;  // beta_plus
    LmsForms f;
    f.L = RatPoly({-r * r, BigRational(1, 2), BigRational(1)}) * RatPoly({-bp, BigRational(1)});
    f.M = (RatPoly({2 * r * r + 1, BigRational(-5), BigRational(2)}) *
           RatPoly({-bp - 1, BigRational(1)}))
              .scaled(BigRational(1, 2));
    RatPoly q1({-bp, BigRational(1)}), q2({-bp - 1, BigRational(1)});
    f.S = q1 * q1 * q2 * q2;
    return f;
}

namespace {

LmsEvaluation finish(LmsForms forms, const BigRational& e1, const BigRational& e2,
                     const BigRational& x) {
    LmsEvaluation e;
    e.L = std::move(forms.L);
    e.M = std::move(forms.M);
    e.S = std::move(forms.S);
    e.k1 = x;
    e.rs = e2;
    e.rps = e1;
    e.Lk = e.L.eval(x);
    e.Mk = e.M.eval(x);
    e.Sk = e.S.eval(x);
    e.T = e2 * (e2 + e1 + 1);  // r(r+1)s(s+1)
    e.h = QuadExt::sqrt_of(4 * e.T + 1);
    e.beta_plus = QuadExt(-e2 - BigRational(1, 2)) + e.h / QuadExt(2);
    e.delta = QuadExt(-e2) + QuadExt::sqrt_of(e.T);
    return e;
}

}  // namespace

LmsEvaluation lms_at_k1(const SrgParams& p) {
    BigRational e1 = p.rps(), e2 = p.rs(), k1(p.k1);
    if (p.r.is_rational())
        return finish(lms_general(p.r.a(), p.s.a()), e1, e2, k1);
    // irrational eigenvalues force r + s = -1; use rho = r(r+1) = k1 - mu
    BigRational rho(p.k1 - p.mu);
    return finish(lms_conference(rho), e1, e2, k1);
}

LmsEvaluation lms_at_point(const BigRational& r, const BigRational& s, const BigRational& x) {
    return finish(lms_general(r, s), r + s, r * s, x);
}

CriticalPoints critical_points(const BigRational& r, const BigRational& s) {
    BigRational e1 = r + s, e2 = r * s;
    BigRational T = e2 * (e2 + e1 + 1);
    CriticalPoints c;
    c.h = QuadExt::sqrt_of(4 * T + 1);
    QuadExt half(BigRational(1, 2));
    c.beta_minus = QuadExt(-e2 - BigRational(1, 2)) - c.h * half;
    c.beta_plus = QuadExt(-e2 - BigRational(1, 2)) + c.h * half;
    c.delta = QuadExt(-e2) + QuadExt::sqrt_of(T);
    BigRational ra = e1 * e1 - 8 * e2 - 2 * e1 + 1;  // (s-1)^2 - 6rs + r(r-2)
    if (ra >= 0) {
        QuadExt root = QuadExt::sqrt_of(ra);
        c.alpha_minus = (QuadExt(e1 - 1) - root) * half;
        c.alpha_plus = (QuadExt(e1 - 1) + root) * half;
    }
    BigRational rg = e1 * e1 + 8 * e2 + 6 * e1 + 9;  // r^2 + 2(5s+3)r + (s+3)^2
    if (rg >= 0) {
        QuadExt root = QuadExt::sqrt_of(rg);
        c.gamma_minus = (QuadExt(e1 + 3) - root) * half;
        c.gamma_plus = (QuadExt(e1 + 3) + root) * half;
    }
    return c;
}

CriticalQuadratics critical_quadratics(const BigRational& r, const BigRational& s) {
    BigRational e1 = r + s, e2 = r * s;
    BigRational T = e2 * (e2 + e1 + 1);
    CriticalQuadratics q;
    q.Qalpha = RatPoly({2 * e2, -(e1 - 1), BigRational(1)});
    q.Qbeta = RatPoly({e2 * e2 + e2 - T, 2 * e2 + 1, BigRational(1)});
    q.Qgamma = RatPoly({-2 * e2, -(e1 + 3), BigRational(1)});
    q.Qbeta1 = RatPoly({e2 * e2 - e2 - T, 2 * e2 - 1, BigRational(1)});
    return q;
}

}  // namespace srgh
