#include "srgh/poly.hpp"

#include <cassert>

namespace srgh {

namespace {
const BigRational kZero(0);

long sign_variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monomial(const BigRational& coeff, int deg) {
    if (coeff == 0) return RatPoly();
    std::vector<BigRational> c(deg + 1, BigRational(0));
    c[deg] = coeff;
    return RatPoly(std::move(c));
}

const BigRational& RatPoly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const BigRational& RatPoly::leading() const {
    if (is_zero()) return kZero;
    return c_.back();
}

BigRational RatPoly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadExt RatPoly::eval(const QuadExt& x) const {
    QuadExt acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadExt(*it);
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<BigRational> d;
    for (int i = 1; i < static_cast<int>(c_.size()); ++i) d.push_back(c_[i] * i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::content_normalized() const {
    if (is_zero()) return *this;
    // positive content: gcd of numerators over lcm of denominators
    BigInt g = 0, l = 1;
    for (const auto& c : c_) {
        g = boost::multiprecision::gcd(g, abs(num(c)));
        l = boost::multiprecision::lcm(l, den(c));
    }
    BigRational content(g, l);
    return scaled(1 / content);
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
    std::vector<BigRational> c(std::max(p.c_.size(), q.c_.size()), BigRational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p[static_cast<int>(i)] + q[static_cast<int>(i)];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) { return p + (-q); }

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return RatPoly();
    std::vector<BigRational> c(p.c_.size() + q.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const BigRational& k) const {
    RatPoly r = *this;
    for (auto& c : r.c_) c *= k;
    r.trim();
    return r;
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += c_[i] > 0 ? " + " : " - ";
        else if (c_[i] < 0) s += "-";
        BigRational mag = abs(c_[i]);
        bool unit = mag == 1 && i > 0;
        if (!unit) s += to_string(mag);
        if (i > 0) s += (unit ? "" : "*") + std::string("X") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

DivRemResult poly_divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    std::vector<BigRational> r(a.coeffs());
    std::vector<BigRational> q(std::max<size_t>(1, r.size()), BigRational(0));
    int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        BigRational k = r.back() / b.leading();
        int pos = static_cast<int>(r.size()) - 1 - db;
        q[pos] = k;
        for (int i = 0; i <= db; ++i) r[pos + i] -= k * b[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

SturmChain sturm_chain(const RatPoly& p, bool normalize_content) {
    SturmChain chain;
    chain.normalized = normalize_content;
    auto push = [&](RatPoly q) {
        chain.polys.push_back(normalize_content ? q.content_normalized() : std::move(q));
    };
    if (p.is_zero()) return chain;
    push(p);
    RatPoly d = p.derivative();
    if (d.is_zero()) return chain;
    push(d);
    while (true) {
        auto [_, rem] = poly_divrem(chain.polys[chain.polys.size() - 2], chain.polys.back());
        if (rem.is_zero()) break;
        push(-rem);
    }
    return chain;
}

std::vector<int> SturmChain::degrees() const {
    std::vector<int> d;
    for (const auto& p : polys) d.push_back(p.degree());
    return d;
}

std::vector<int> SturmChain::leading_signs() const {
    std::vector<int> s;
    for (const auto& p : polys) s.push_back(sgn(p.leading()));
    return s;
}

std::vector<int> SturmChain::alternating_signs() const {
    std::vector<int> s;
    for (const auto& p : polys) s.push_back(p.degree() % 2 ? -sgn(p.leading()) : sgn(p.leading()));
    return s;
}

std::vector<int> SturmChain::signs_at(const QuadExt& x) const {
    std::vector<int> s;
    for (const auto& p : polys) s.push_back(p.eval(x).sign());
    return s;
}

long count_real_roots(const SturmChain& chain, const Interval& iv) {
    if (chain.polys.empty() || chain.polys[0].degree() <= 0) return 0;
    const RatPoly& p = chain.polys[0];
    auto vars_at = [&](const std::optional<QuadExt>& end, bool is_hi) -> long {
        if (!end) return sign_variations(is_hi ? chain.leading_signs() : chain.alternating_signs());
        if (!end->is_real()) throw NegativeInput("interval endpoint must be real");
        if (p.eval(*end).is_zero()) throw EndpointIsRoot("endpoint " + end->str() + " is a root");
        return sign_variations(chain.signs_at(*end));
    };
    if (iv.lo && iv.hi && compare_real(*iv.lo, *iv.hi) >= 0) return 0;
    long v = vars_at(iv.lo, false) - vars_at(iv.hi, true);
    assert(v >= 0);
    return v;
}

long count_real_roots(const RatPoly& p, const Interval& iv) {
    return count_real_roots(sturm_chain(p), iv);
}

}  // namespace srgh
