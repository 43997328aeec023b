#include "srgh/rational.hpp"

#include <cassert>

namespace srgh {

BigInt isqrt_floor(const BigInt& x) {
    if (x < 0) throw NegativeInput("isqrt of negative integer");
    if (x == 0) return 0;
    BigInt s = boost::multiprecision::sqrt(x);
    // sqrt() is specified to truncate, but correct defensively so the
    // invariant s^2 <= x < (s+1)^2 is certain.
    while (s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

std::optional<BigInt> exact_sqrt(const BigInt& x) {
    if (x < 0) throw NegativeInput("square root of negative integer");
    BigInt s = isqrt_floor(x);
    if (s * s == x) return s;
    return std::nullopt;
}

std::optional<BigRational> rational_sqrt(const BigRational& x) {
    if (x < 0) throw NegativeInput("square root of negative rational");
    auto p = exact_sqrt(num(x));
    if (!p) return std::nullopt;
    auto q = exact_sqrt(den(x));
    if (!q) return std::nullopt;
    return BigRational(*p, *q);
}

std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n) {
    if (n < 1) throw NegativeInput("squarefree decomposition needs n >= 1");
    BigInt m = n, c = 1, d = 1;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) c *= p;
        if (e % 2) d *= p;
    }
    d *= m;  // remaining prime (or 1)
    assert(c * c * d == n);
    return {c, d};
}

std::string to_string(const BigRational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

BigRational rational_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw DivisionByZero("rational literal with zero denominator");
        return BigRational(p, q);
    } catch (const std::runtime_error& e) {
        throw;
    } catch (const std::exception&) {
        throw Error("malformed rational literal: " + s);
    }
}

}  // namespace srgh
