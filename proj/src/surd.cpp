#include "lts/surd.hpp"

#include <stdexcept>

namespace lts {

namespace {

// splits r = s^2 * d with d free of square factors below 1001^2; also folds d in
// entirely when the remainder is itself a perfect square
void extract_square_part(const BigInt& r, BigInt& s, BigInt& d) {
  s = 1;
  d = r;
  for (unsigned long f = 2; f <= 1000; ++f) {
    const BigInt f2 = BigInt(f) * f;
    while (mpz_divisible_p(d.get_mpz_t(), f2.get_mpz_t())) {
      d /= f2;
      s *= f;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    s *= root;
    d = 1;
  }
}

}  // namespace

std::variant<Rational, Surd> make_surd(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(c) < 0) throw std::invalid_argument("surd: negative radicand");
  if (sgn(b) == 0 || sgn(c) == 0) return a;
  // b*sqrt(p/q) = (b/q)*sqrt(p*q): move to an integer radicand first
  const BigInt radicand = c.get_num() * c.get_den();
  Rational coeff = b / Rational(c.get_den());
  BigInt s, d;
  extract_square_part(radicand, s, d);
  coeff *= Rational(s);
  if (d == 1) return Rational(a + coeff);
  return Surd{a, coeff, d};
}

int sign(const Surd& s) {
  const int sa = sgn(s.a);
  const int sb = sgn(s.b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2*c
  const Rational lhs = s.a * s.a;
  const Rational rhs = s.b * s.b * Rational(s.c);
  const int cmp2 = cmp(lhs, rhs);
  if (cmp2 == 0) return 0;  // unreachable for canonical c (not a square)
  return cmp2 > 0 ? sa : sb;
}

Surd neg(const Surd& s) { return Surd{-s.a, -s.b, s.c}; }

std::string to_string(const Surd& s) {
  return to_string(s.a) + " + " + to_string(s.b) + "*sqrt(" + s.c.get_str() + ")";
}

std::variant<Rational, Surd> surd_add(const Surd& x, const Surd& y) {
  if (x.c != y.c) throw std::invalid_argument("surd_add: mixed radicands");
  Rational b = x.b + y.b;
  if (sgn(b) == 0) return Rational(x.a + y.a);
  return Surd{x.a + y.a, b, x.c};
}

std::variant<Rational, Surd> surd_sub(const Surd& x, const Surd& y) {
  return surd_add(x, neg(y));
}

std::variant<Rational, Surd> surd_mul(const Surd& x, const Surd& y) {
  if (x.c != y.c) throw std::invalid_argument("surd_mul: mixed radicands");
  const Rational a = x.a * y.a + x.b * y.b * Rational(x.c);
  const Rational b = x.a * y.b + x.b * y.a;
  if (sgn(b) == 0) return a;
  return Surd{a, b, x.c};
}

Surd surd_add(const Surd& x, const Rational& r) { return Surd{x.a + r, x.b, x.c}; }

std::variant<Rational, Surd> surd_mul(const Surd& x, const Rational& r) {
  if (sgn(r) == 0) return Rational(0);
  return Surd{x.a * r, x.b * r, x.c};
}

bool in_unit_interval(const Surd& s) {
  if (sign(s) < 0) return false;
  return sign(Surd{s.a - 1, s.b, s.c}) <= 0;
}

}  // namespace lts
