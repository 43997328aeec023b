#include "srgh/srg.hpp"

#include <cassert>

namespace srgh {

BigRational SrgParams::rs() const { return BigRational(mu - k1); }
BigRational SrgParams::rps() const { return BigRational(lambda - mu); }

namespace {

SrgParams build(const BigInt& n, const BigInt& k1, const BigInt& lambda, const BigInt& mu, bool swapped) {
    if (n < 3 || k1 < 1 || k1 > n - 2 || lambda < 0 || lambda > k1 - 1 || mu < 0 || mu > k1)
        throw InfeasibleParams("range");
    BigInt k2 = n - 1 - k1;
    if (k2 * mu != k1 * (k1 - lambda - 1))
        throw InfeasibleParams("identity_violation",
                               "k2*mu = " + BigInt(k2 * mu).str() + ", k1*(k1-lambda-1) = " +
                                   BigInt(k1 * (k1 - lambda - 1)).str());

    BigInt c = lambda - mu;  // r + s
    if (c <= -2 && !swapped)
        return build(n, k2, n - 2 - 2 * k1 + mu, n - 2 * k1 + lambda, true);

    SrgParams p;
    p.n = n;
    p.k1 = k1;
    p.k2 = k2;
    p.lambda = lambda;
    p.mu = mu;
    p.swapped = swapped;

    BigInt q = c * c + 4 * (k1 - mu);  // eigenvalue discriminant, >= 0 since mu <= k1
    auto sq = exact_sqrt(q);
    BigInt tr = 2 * k1 + (n - 1) * c;  // m1*sqrt(q) balance term
    if (!sq) {
        if (tr != 0) throw InfeasibleParams("m_irrational", "q = " + q.str());
        if ((n - 1) % 2 != 0) throw InfeasibleParams("m1_not_integral", to_string(BigRational(n - 1, 2)));
        p.m1 = p.m2 = BigRational(n - 1, 2);
    } else {
        if (*sq == 0) throw InfeasibleParams("range", "repeated eigenvalue");
        BigRational m1 = (BigRational(n - 1) - BigRational(tr, *sq)) / 2;
        BigRational m2 = BigRational(n - 1) - m1;
        if (den(m1) != 1 || den(m2) != 1)
            throw InfeasibleParams("m1_not_integral", to_string(m1));
        if (m1 < 1 || m2 < 1) throw InfeasibleParams("range", "non-positive multiplicity");
        p.m1 = m1;
        p.m2 = m2;
    }
    p.r = QuadExt(BigRational(c, 2), BigRational(1, 2), q);
    p.s = QuadExt(BigRational(c, 2), BigRational(-1, 2), q);

    if (lambda == k1 - 1 || mu == 0 || (p.s + QuadExt(1)).is_zero())
        throw InfeasibleParams("s_eq_minus_one");
    if (k2 < 2) throw InfeasibleParams("k2_lt_2");

    p.conference = is_conference(p);
    return p;
}

}  // namespace

SrgParams params_from_nklm(const BigInt& n, const BigInt& k1, const BigInt& lambda, const BigInt& mu) {
    return build(n, k1, lambda, mu, false);
}

bool is_conference(const SrgParams& p) {
    // k1 = 2r(r+1) with r(r+1) = k1 - mu, alongside the multiplicity condition
    bool by_valency = (p.lambda - p.mu == -1) && (p.k1 == 2 * (p.k1 - p.mu));
    bool by_multiplicity = p.m1 == p.m2;
    assert(by_valency == by_multiplicity);
    return by_valency && by_multiplicity;
}

std::array<std::array<QuadExt, 3>, 3> eigenmatrix(const SrgParams& p) {
    QuadExt one(1);
    return {{{one, QuadExt(BigRational(p.k1)), QuadExt(BigRational(p.k2))},
             {one, p.r, -(p.r + one)},
             {one, p.s, -(p.s + one)}}};
}

BigRational k2_from_eigen(const BigRational& k1, const QuadExt& r, const QuadExt& s) {
    QuadExt denom = QuadExt(k1) + r * s;
    if (denom.is_zero()) throw ZeroMu();
    QuadExt k2 = -(QuadExt(k1) * (r + QuadExt(1)) * (s + QuadExt(1))) / denom;
    return k2.rational_value();
}

FeasibilityResult feasibility_bounds(const SrgParams& p) {
    QuadExt np1(BigRational(p.n + 1));
    if ((p.s + QuadExt(1)).sign() >= 0)
        return {false, "s_lt_minus_one", "s = " + p.s.str()};
    QuadExt sb = QuadExt(4) * p.s * p.s - np1;
    if (sb.sign() < 0)
        return {false, "n_bound_s", "n+1 = " + BigInt(p.n + 1).str() + " > 4s^2"};
    QuadExt rb = QuadExt(4) * (p.r + QuadExt(1)) * (p.r + QuadExt(1)) - np1;
    if (rb.sign() < 0)
        return {false, "n_bound_r", "n+1 = " + BigInt(p.n + 1).str() + " > 4(r+1)^2"};
    return {};
}

}  // namespace srgh
