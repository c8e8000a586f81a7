#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodge {

// Always canonical: gcd(num, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace hodge
