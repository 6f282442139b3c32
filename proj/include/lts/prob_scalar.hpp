#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <variant>

#include "lts/interval.hpp"
#include "lts/rational.hpp"
#include "lts/surd.hpp"

namespace lts {

// Exact scalar: a rational or a quadratic surd, canonical either way. Arithmetic
// stays exact whenever the operands share a radicand; mixed radicands return
// nullopt and the caller drops to interval mode.
class ProbScalar {
 public:
  ProbScalar() : v_(Rational(0)) {}
  ProbScalar(Rational r) : v_(std::move(r)) {}
  ProbScalar(Surd s) : v_(std::move(s)) {}
  ProbScalar(std::variant<Rational, Surd> v);

  static ProbScalar rat(long num, long den) { return ProbScalar(make_rational(num, den)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Surd& as_surd() const { return std::get<Surd>(v_); }

  int sign() const;
  bool in_unit() const;
  bool operator==(const ProbScalar& o) const { return v_ == o.v_; }

 private:
  std::variant<Rational, Surd> v_;
};

std::optional<ProbScalar> try_add(const ProbScalar& x, const ProbScalar& y);
std::optional<ProbScalar> try_sub(const ProbScalar& x, const ProbScalar& y);
std::optional<ProbScalar> try_mul(const ProbScalar& x, const ProbScalar& y);
ProbScalar neg(const ProbScalar& x);
ProbScalar one_minus(const ProbScalar& x);  // always exact
std::string to_string(const ProbScalar& x);

// enclosure computed at the given MPFR precision, then rounded outward to double
Interval eval_interval(const ProbScalar& x, int precision_bits);
Interval eval_interval(const Rational& q, int precision_bits);

void to_json(nlohmann::json& j, const ProbScalar& x);
void from_json(const nlohmann::json& j, ProbScalar& x);

}  // namespace lts
