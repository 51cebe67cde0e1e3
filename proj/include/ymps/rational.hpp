#pragma once

#include <gmpxx.h>

#include <string>

namespace ymps {

using Integer = mpz_class;

/// Exact rational number, always kept in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;

/// Builds a canonical Rational from a numerator/denominator pair.
Rational make_rational(Integer num, Integer den);

/// 2^e as an exact integer.
Integer pow2(unsigned long e);

bool is_integer(const Rational& q);

/// "n" or "n/d" in decimal.
std::string to_string(const Rational& q);

}  // namespace ymps
