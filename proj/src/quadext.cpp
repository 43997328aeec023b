#include "srgh/quadext.hpp"

#include <cassert>

namespace srgh {

QuadExt::QuadExt(const BigRational& a, const BigRational& b, const BigInt& d) : a_(a), b_(b), d_(d) {
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    auto [c, d0] = squarefree_decompose(abs(d_));
    if (c != 1) {
        b_ *= c;
        d_ = d_ < 0 ? -d0 : d0;
    }
    if (d_ == 1) {  // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

QuadExt QuadExt::sqrt_of(const BigRational& x) {
    if (x == 0) return QuadExt();
    auto [cp, dp] = squarefree_decompose(abs(num(x)));
    auto [cq, dq] = squarefree_decompose(den(x));
    BigRational coef(cp * cq, den(x));
    BigInt d = dp * dq;  // may carry a square gcd; the constructor folds it
    return QuadExt(BigRational(0), coef, x > 0 ? d : -d);
}

const BigRational& QuadExt::rational_value() const {
    if (!is_rational()) throw Error("element is irrational: " + str());
    return a_;
}

QuadExt QuadExt::conj() const {
    if (d_ >= 0) return *this;
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

BigRational QuadExt::field_norm() const { return a_ * a_ - b_ * b_ * BigRational(d_); }

BigRational QuadExt::modulus_sq() const {
    if (d_ > 0) throw Error("modulus_sq needs a rational or imaginary element");
    return field_norm();
}

bool QuadExt::is_unit_modulus() const { return d_ <= 0 && field_norm() == 1; }

int QuadExt::sign() const {
    if (d_ < 0) throw NegativeInput("sign of an imaginary element");
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    if (sgn(a_) == sgn(b_)) return sgn(a_);
    // a and b*sqrt(d) have opposite signs: compare a^2 with b^2 d.
    int c = sgn(a_ * a_ - b_ * b_ * BigRational(d_));
    assert(c != 0);  // d squarefree and b != 0 rule out equality
    return c > 0 ? sgn(a_) : sgn(b_);
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

BigInt QuadExt::join_field(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw IncompatibleField("cannot combine sqrt(" + x.d_.str() + ") with sqrt(" + y.d_.str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    BigInt d = join_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = b_ == 0 ? BigInt(0) : d;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    BigInt d = join_field(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = b_ == 0 ? BigInt(0) : d;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    BigInt d = join_field(*this, o);
    BigRational a = a_ * o.a_ + b_ * o.b_ * BigRational(d);
    BigRational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = b_ == 0 ? BigInt(0) : d;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero element");
    BigInt d = join_field(*this, o);
    // multiply by the field conjugate of o and divide by its norm
    BigRational n = o.field_norm();
    assert(n != 0);  // nonzero elements of Q(sqrt(d)) have nonzero norm
    QuadExt oc = o;
    oc.b_ = -oc.b_;
    oc.d_ = d;
    QuadExt t = *this;
    t.d_ = t.b_ == 0 ? BigInt(0) : d;
    t *= oc;
    t.a_ /= n;
    t.b_ /= n;
    t.d_ = t.b_ == 0 ? BigInt(0) : d;
    *this = t;
    return *this;
}

std::string QuadExt::str() const {
    if (is_rational()) return to_string(a_);
    std::string root = "sqrt(" + d_.str() + ")";
    std::string tail = b_ == 1 ? root : (b_ == -1 ? "-" + root : to_string(b_) + "*" + root);
    if (a_ == 0) return tail;
    return to_string(a_) + (b_ > 0 ? " + " + (b_ == 1 ? root : to_string(b_) + "*" + root)
                                   : " - " + (b_ == -1 ? root : to_string(-b_) + "*" + root));
}

int compare_real(const QuadExt& x, const QuadExt& y) {
    if (!x.is_real() || !y.is_real()) throw NegativeInput("compare_real needs real elements");
    if (x.d() == 0 || y.d() == 0 || x.d() == y.d()) return (x - y).sign();
    // x - y = u - v with u = (ax - ay) + bx*sqrt(dx) and v = by*sqrt(dy).
    QuadExt u(x.a() - y.a(), x.b(), x.d());
    QuadExt v(BigRational(0), y.b(), y.d());
    int su = u.sign(), sv = v.sign();
    if (su != sv) return su > sv ? 1 : -1;
    if (su == 0) return 0;
    // same nonzero sign: u - v and u^2 - v^2 share their sign iff u + v > 0
    BigRational v_sq = v.b() * v.b() * BigRational(v.d());
    QuadExt w = u * u - QuadExt(v_sq);
    return su > 0 ? w.sign() : -w.sign();
}

}  // namespace srgh
