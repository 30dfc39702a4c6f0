#pragma once

#include <gmpxx.h>

#include <string>

namespace apolaris {

// Exact arithmetic backend. Rationals are kept canonical by GMP:
// lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(unsigned long n);

// Builds a canonical rational, rejecting zero denominators.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace apolaris
