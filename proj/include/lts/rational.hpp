#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lts {

// GMP keeps mpq_class values canonical (reduced, positive denominator) as long as
// they are built through the helpers below; raw two-argument construction does not
// canonicalize on its own.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

// accepts "num" or "num/den", base 10
Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& q);

bool in_unit_interval(const Rational& q);

// exact square root when q is the square of a rational, empty otherwise; q must be >= 0
std::optional<Rational> exact_sqrt(const Rational& q);

// q^k for k >= 0
Rational rational_pow(const Rational& q, unsigned long k);

}  // namespace lts
