#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

#include "srgh/errors.hpp"

namespace srgh {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const BigInt& x) { return x.sign(); }
inline int sgn(const BigRational& x) { return x.sign(); }

/** Floor of the square root of a non-negative integer, exactly. */
BigInt isqrt_floor(const BigInt& x);

/** The integer square root when x is a perfect square. Throws NegativeInput for x < 0. */
std::optional<BigInt> exact_sqrt(const BigInt& x);

/** The rational square root when x is the square of a rational. Throws NegativeInput for x < 0. */
std::optional<BigRational> rational_sqrt(const BigRational& x);

/** Decomposes n >= 1 as c^2 * d with d squarefree. Throws NegativeInput for n < 1. */
std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n);

std::string to_string(const BigRational& q);            // "p" or "p/q"
BigRational rational_from_string(const std::string& s); // accepts "p" and "p/q"

}  // namespace srgh
