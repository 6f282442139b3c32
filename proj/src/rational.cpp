#include "lts/rational.hpp"

#include <stdexcept>

namespace lts {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rational(BigInt(s), 1);
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool in_unit_interval(const Rational& q) { return sgn(q) >= 0 && q <= 1; }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) throw std::invalid_argument("exact_sqrt: negative argument");
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

Rational rational_pow(const Rational& q, unsigned long k) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), k);
  return make_rational(num, den);
}

}  // namespace lts
