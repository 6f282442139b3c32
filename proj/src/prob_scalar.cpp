#include "lts/prob_scalar.hpp"

#include <mpfr.h>

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace lts {

ProbScalar::ProbScalar(std::variant<Rational, Surd> v) {
  if (auto* r = std::get_if<Rational>(&v))
    v_ = std::move(*r);
  else
    v_ = std::move(std::get<Surd>(v));
}

int ProbScalar::sign() const {
  if (is_rational()) return sgn(as_rational());
  return lts::sign(as_surd());
}

bool ProbScalar::in_unit() const {
  if (is_rational()) return in_unit_interval(as_rational());
  return in_unit_interval(as_surd());
}

namespace {

Surd promote(const Rational& r, const BigInt& c) { return Surd{r, Rational(0), c}; }

// arithmetic on possibly-demoted results; the helpers in surd.cpp keep canonical form
template <typename Op>
std::optional<ProbScalar> combine(const ProbScalar& x, const ProbScalar& y, Op op) {
  if (x.is_rational() && y.is_rational())
    return ProbScalar(op(x.as_rational(), y.as_rational()));
  if (x.is_rational()) {
    const Surd& sy = y.as_surd();
    return ProbScalar(op(promote(x.as_rational(), sy.c), sy));
  }
  if (y.is_rational()) {
    const Surd& sx = x.as_surd();
    return ProbScalar(op(sx, promote(y.as_rational(), sx.c)));
  }
  if (x.as_surd().c != y.as_surd().c) return std::nullopt;
  return ProbScalar(op(x.as_surd(), y.as_surd()));
}

struct AddOp {
  Rational operator()(const Rational& a, const Rational& b) const { return a + b; }
  std::variant<Rational, Surd> operator()(const Surd& a, const Surd& b) const {
    return surd_add(a, b);
  }
};
struct SubOp {
  Rational operator()(const Rational& a, const Rational& b) const { return a - b; }
  std::variant<Rational, Surd> operator()(const Surd& a, const Surd& b) const {
    return surd_sub(a, b);
  }
};
struct MulOp {
  Rational operator()(const Rational& a, const Rational& b) const { return a * b; }
  std::variant<Rational, Surd> operator()(const Surd& a, const Surd& b) const {
    return surd_mul(a, b);
  }
};

}  // namespace

std::optional<ProbScalar> try_add(const ProbScalar& x, const ProbScalar& y) {
  return combine(x, y, AddOp{});
}
std::optional<ProbScalar> try_sub(const ProbScalar& x, const ProbScalar& y) {
  return combine(x, y, SubOp{});
}
std::optional<ProbScalar> try_mul(const ProbScalar& x, const ProbScalar& y) {
  return combine(x, y, MulOp{});
}

ProbScalar neg(const ProbScalar& x) {
  if (x.is_rational()) return ProbScalar(Rational(-x.as_rational()));
  return ProbScalar(lts::neg(x.as_surd()));
}

ProbScalar one_minus(const ProbScalar& x) {
  if (x.is_rational()) return ProbScalar(Rational(1 - x.as_rational()));
  const Surd& s = x.as_surd();
  return ProbScalar(Surd{1 - s.a, -s.b, s.c});
}

std::string to_string(const ProbScalar& x) {
  if (x.is_rational()) return to_string(x.as_rational());
  return to_string(x.as_surd());
}

Interval eval_interval(const Rational& q, int precision_bits) {
  mpfr_t lo, hi;
  mpfr_init2(lo, precision_bits);
  mpfr_init2(hi, precision_bits);
  mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, q.get_mpq_t(), MPFR_RNDU);
  Interval out{mpfr_get_d(lo, MPFR_RNDD), mpfr_get_d(hi, MPFR_RNDU)};
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

Interval eval_interval(const ProbScalar& x, int precision_bits) {
  if (precision_bits < 8 || precision_bits > 8192)
    throw std::invalid_argument("eval_interval: precision out of range");
  if (x.is_rational()) return eval_interval(x.as_rational(), precision_bits);
  const Surd& s = x.as_surd();

  mpfr_t c, root_lo, root_hi, b_lo, b_hi, term_lo, term_hi, acc_lo, acc_hi;
  for (auto* m : {&c, &root_lo, &root_hi, &b_lo, &b_hi, &term_lo, &term_hi, &acc_lo, &acc_hi})
    mpfr_init2(*m, precision_bits);

  mpfr_set_z(c, s.c.get_mpz_t(), MPFR_RNDD);
  mpfr_sqrt(root_lo, c, MPFR_RNDD);
  mpfr_set_z(c, s.c.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(root_hi, c, MPFR_RNDU);
  mpfr_set_q(b_lo, s.b.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b_hi, s.b.get_mpq_t(), MPFR_RNDU);

  // b >= 0: b*sqrt(c) minimized by low b, low root; b < 0: low b, high root
  if (sgn(s.b) >= 0) {
    mpfr_mul(term_lo, b_lo, root_lo, MPFR_RNDD);
    mpfr_mul(term_hi, b_hi, root_hi, MPFR_RNDU);
  } else {
    mpfr_mul(term_lo, b_lo, root_hi, MPFR_RNDD);
    mpfr_mul(term_hi, b_hi, root_lo, MPFR_RNDU);
  }
  mpfr_set_q(acc_lo, s.a.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(acc_hi, s.a.get_mpq_t(), MPFR_RNDU);
  mpfr_add(acc_lo, acc_lo, term_lo, MPFR_RNDD);
  mpfr_add(acc_hi, acc_hi, term_hi, MPFR_RNDU);

  Interval out{mpfr_get_d(acc_lo, MPFR_RNDD), mpfr_get_d(acc_hi, MPFR_RNDU)};
  for (auto* m : {&c, &root_lo, &root_hi, &b_lo, &b_hi, &term_lo, &term_hi, &acc_lo, &acc_hi})
    mpfr_clear(*m);
  return out;
}

std::string to_string(const Interval& x) {
  return "[" + std::to_string(x.lo) + ", " + std::to_string(x.hi) + "]";
}

namespace {

nlohmann::json rational_to_json_pair(const Rational& q) {
  return nlohmann::json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json_pair(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("scalar: expected [num, den] pair");
  return make_rational(BigInt(j[0].get<std::string>()), BigInt(j[1].get<std::string>()));
}

}  // namespace

void to_json(nlohmann::json& j, const ProbScalar& x) {
  if (x.is_rational()) {
    const Rational& q = x.as_rational();
    j = nlohmann::json{
        {"rat", {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}}};
  } else {
    const Surd& s = x.as_surd();
    j = nlohmann::json{{"surd",
                        {{"a", rational_to_json_pair(s.a)},
                         {"b", rational_to_json_pair(s.b)},
                         {"c", rational_to_json_pair(Rational(s.c))}}}};
  }
}

void from_json(const nlohmann::json& j, ProbScalar& x) {
  if (j.contains("rat")) {
    const auto& r = j.at("rat");
    x = ProbScalar(
        make_rational(BigInt(r.at("num").get<std::string>()), BigInt(r.at("den").get<std::string>())));
  } else if (j.contains("surd")) {
    const auto& s = j.at("surd");
    x = ProbScalar(make_surd(rational_from_json_pair(s.at("a")),
                             rational_from_json_pair(s.at("b")),
                             rational_from_json_pair(s.at("c"))));
  } else {
    throw std::invalid_argument("scalar: expected 'rat' or 'surd'");
  }
}

}  // namespace lts
