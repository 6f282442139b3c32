#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lts {

// Closed interval with double endpoints. Every operation widens outward by a
// multiplicative bump: a correctly rounded result r differs from the exact value
// by at most |r|*2^-53 + 2^-1074, and the bump |r|*2^-51 + 1e-300 strictly covers
// that, so containment of the exact value is preserved without nextafter calls.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double x) { return {x, x}; }
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

inline constexpr double kIvRelBump = 0x1p-51;
inline constexpr double kIvAbsBump = 1e-300;

inline double bump_up(double x) { return x + (std::fabs(x) * kIvRelBump + kIvAbsBump); }
inline double bump_down(double x) { return x - (std::fabs(x) * kIvRelBump + kIvAbsBump); }

inline Interval iv_add(const Interval& x, const Interval& y) {
  return {bump_down(x.lo + y.lo), bump_up(x.hi + y.hi)};
}

inline Interval iv_sub(const Interval& x, const Interval& y) {
  return {bump_down(x.lo - y.hi), bump_up(x.hi - y.lo)};
}

inline Interval iv_neg(const Interval& x) { return {-x.hi, -x.lo}; }

inline Interval iv_mul(const Interval& x, const Interval& y) {
  if (x.lo >= 0.0 && y.lo >= 0.0)  // the propagation kernels only ever leave this path
    return {bump_down(x.lo * y.lo), bump_up(x.hi * y.hi)};
  const double a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
  const double lo = std::fmin(std::fmin(a, b), std::fmin(c, d));
  const double hi = std::fmax(std::fmax(a, b), std::fmax(c, d));
  return {bump_down(lo), bump_up(hi)};
}

inline Interval hull(const Interval& x, const Interval& y) {
  return {std::fmin(x.lo, y.lo), std::fmax(x.hi, y.hi)};
}

// pairwise reduction keeps the accumulated width O(log n) bumps instead of O(n)
inline Interval pairwise_sum(std::span<const Interval> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return Interval::point(0.0);
  if (n == 1) return xs[0];
  if (n == 2) return iv_add(xs[0], xs[1]);
  const std::size_t half = n / 2;
  return iv_add(pairwise_sum(xs.subspan(0, half)), pairwise_sum(xs.subspan(half)));
}

std::string to_string(const Interval& x);

}  // namespace lts
