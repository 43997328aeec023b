#pragma once

#include <string>

#include "srgh/rational.hpp"

namespace srgh {

/**
 * QuadExt: numbers a + b*sqrt(d) with a, b rational and d a squarefree
 * integer. d = 0 encodes a pure rational (b is then 0); d < 0 gives an
 * imaginary quadratic field. Construction normalizes: square factors of d
 * are folded into b, and d = 1 collapses to a rational. Arithmetic between
 * two elements with distinct nonzero discriminants throws IncompatibleField.
 */
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const BigRational& a) : a_(a), b_(0), d_(0) {}  // NOLINT: implicit by design
    QuadExt(int a) : a_(a), b_(0), d_(0) {}                 // NOLINT
    QuadExt(const BigRational& a, const BigRational& b, const BigInt& d);

    /** Principal square root of a rational: real for x >= 0, i*sqrt(|x|) for x < 0. */
    static QuadExt sqrt_of(const BigRational& x);

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    const BigInt& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return d_ == 0; }
    bool is_real() const { return d_ >= 0; }

    /** The rational value; throws if the element is irrational. */
    const BigRational& rational_value() const;

    /** Complex conjugate: flips b for d < 0, identity for real elements. */
    QuadExt conj() const;

    /** Field norm a^2 - b^2 d (rational for every d; equals |x|^2 when d <= 0). */
    BigRational field_norm() const;

    /** |x|^2 as a rational; requires d <= 0. */
    BigRational modulus_sq() const;
    bool is_unit_modulus() const;

    /** Exact sign of a real element; throws for d < 0. */
    int sign() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const;  // "a + b*sqrt(d)" with trivial parts omitted

private:
    BigRational a_, b_;
    BigInt d_;

    // merges the discriminants of two operands, or throws IncompatibleField
    static BigInt join_field(const QuadExt& x, const QuadExt& y);
};

/**
 * Exact three-way comparison of two real elements that may live in different
 * quadratic fields (sign of x - y without constructing a mixed element).
 * Returns -1, 0 or +1. Throws NegativeInput if either element is imaginary.
 */
int compare_real(const QuadExt& x, const QuadExt& y);

}  // namespace srgh
