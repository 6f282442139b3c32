#pragma once

#include <variant>

#include "lts/rational.hpp"

namespace lts {

// Value a + b*sqrt(c). Canonical form: c is an integer > 1, not a perfect square,
// with no square factor d^2 for d <= 1000, and b != 0. Equality of canonical forms
// is componentwise; distinct canonical radicands that appear in the constructions
// factor completely below the trial bound, so equal values never hide behind
// different radicands there.
struct Surd {
  Rational a;
  Rational b;
  BigInt c;

  bool operator==(const Surd& o) const { return a == o.a && b == o.b && c == o.c; }
};

// builds the canonical representation of a + b*sqrt(c); collapses to Rational when
// the root resolves (c square, b == 0 after reduction). c must be >= 0.
std::variant<Rational, Surd> make_surd(const Rational& a, const Rational& b, const Rational& c);

int sign(const Surd& s);
Surd neg(const Surd& s);
std::string to_string(const Surd& s);

// closed ops; both arguments already canonical with the same radicand
std::variant<Rational, Surd> surd_add(const Surd& x, const Surd& y);
std::variant<Rational, Surd> surd_sub(const Surd& x, const Surd& y);
std::variant<Rational, Surd> surd_mul(const Surd& x, const Surd& y);

Surd surd_add(const Surd& x, const Rational& r);
std::variant<Rational, Surd> surd_mul(const Surd& x, const Rational& r);

bool in_unit_interval(const Surd& s);

}  // namespace lts
