#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "a", "-a", "+a" and "a/b" with decimal integers. Anything else
// (decimal points, exponents, symbols) is rejected: inputs must be exact.
Rational parse_rational(std::string_view text);

// Canonical form: "a" for integers, "a/b" otherwise, b > 0, lowest terms.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// Smallest positive integer d such that d * q_i is integral for every i.
Integer common_denominator(std::span<const Rational> values);

}  // namespace gkm
