#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncsym {

using Integer = mpz_class;
using Rational = mpq_class;

// n! for small nonnegative n.
Integer factorial(int n);
Integer binomial(int n, int k);

// Reduced "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "a", "-a", "a/b"; throws parse_error.
Rational parse_rational(std::string_view text);

} // namespace ncsym
