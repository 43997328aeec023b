#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srgh/quadext.hpp"

namespace srgh {

/** Dense univariate polynomial over the rationals, coefficients ascending. */
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly monomial(const BigRational& coeff, int deg);
    static RatPoly constant(const BigRational& c) { return monomial(c, 0); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& operator[](int i) const;  // 0 beyond the degree
    const BigRational& leading() const;

    BigRational eval(const BigRational& x) const;
    QuadExt eval(const QuadExt& x) const;

    RatPoly derivative() const;
    /** Divides by the positive content, preserving signs everywhere. */
    RatPoly content_normalized() const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator-(const RatPoly& p, const RatPoly& q);
    friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
    RatPoly scaled(const BigRational& k) const;
    friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.c_ == q.c_; }

    std::string str() const;  // human-readable, highest degree first

private:
    std::vector<BigRational> c_;
    void trim();
};

struct DivRemResult {
    RatPoly quotient, remainder;
};

/** Euclidean division; throws DivisionByZeroPoly when the divisor is zero. */
DivRemResult poly_divrem(const RatPoly& a, const RatPoly& b);

/**
 * Canonical chain p0 = p, p1 = p', p_{j+1} = -rem(p_{j-1}, p_j), stopping
 * before the zero polynomial. Remainders are kept verbatim unless
 * normalize_content is set (which rescales each element by its positive
 * content; all sign data is unchanged).
 */
struct SturmChain {
    std::vector<RatPoly> polys;
    bool normalized = false;

    std::vector<int> degrees() const;
    std::vector<int> leading_signs() const;           // signs at +infinity
    std::vector<int> alternating_signs() const;       // signs at -infinity: sgn((-1)^deg * lead)
    std::vector<int> signs_at(const QuadExt& x) const;
};

SturmChain sturm_chain(const RatPoly& p, bool normalize_content = false);

/** Open interval; an absent endpoint means the corresponding infinity. */
struct Interval {
    std::optional<QuadExt> lo, hi;
};

/**
 * Number of distinct real roots of p in the open interval. Finite endpoints
 * must be real and must not be roots (EndpointIsRoot otherwise).
 */
long count_real_roots(const RatPoly& p, const Interval& iv = {});
long count_real_roots(const SturmChain& chain, const Interval& iv = {});

}  // namespace srgh
