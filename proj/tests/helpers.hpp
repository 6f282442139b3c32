#pragma once

#include <random>

#include "lts/network.hpp"
#include "lts/prob_scalar.hpp"

namespace lts::testing {

inline std::mt19937_64 rng(0x5eedULL);

inline Rational random_rational(std::mt19937_64& g, long max_den = 64) {
  std::uniform_int_distribution<long> den_d(1, max_den);
  const long den = den_d(g);
  std::uniform_int_distribution<long> num_d(-4 * den, 4 * den);
  return make_rational(num_d(g), den);
}

inline Rational random_unit_rational(std::mt19937_64& g, long max_den = 64) {
  std::uniform_int_distribution<long> den_d(1, max_den);
  const long den = den_d(g);
  std::uniform_int_distribution<long> num_d(0, den);
  return make_rational(num_d(g), den);
}

inline ProbScalar random_scalar(std::mt19937_64& g) {
  std::uniform_int_distribution<int> kind(0, 2);
  if (kind(g) == 0) {
    std::uniform_int_distribution<long> c_d(2, 200);
    long c = c_d(g);
    return ProbScalar(make_surd(random_rational(g), random_rational(g), Rational(c)));
  }
  return ProbScalar(random_rational(g));
}

inline ProbScalar random_unit_scalar(std::mt19937_64& g, bool allow_surd = true) {
  std::uniform_int_distribution<int> kind(0, 3);
  if (allow_surd && kind(g) == 0) {
    // 1/2 + (sqrt(c) - floor(sqrt(c)))/16 stays inside (0, 1)
    std::uniform_int_distribution<long> c_d(2, 50);
    long c = c_d(g);
    long root = static_cast<long>(std::sqrt(static_cast<double>(c)));
    while (root * root > c) --root;
    while ((root + 1) * (root + 1) <= c) ++root;
    auto v = make_surd(make_rational(8 - root, 16), make_rational(1, 16), Rational(c));
    if (std::holds_alternative<Surd>(v)) return ProbScalar(std::get<Surd>(v));
  }
  return ProbScalar(random_unit_rational(g));
}

inline Network random_network(std::mt19937_64& g, int max_n = 6, int max_len = 8,
                              bool allow_surd = false) {
  std::uniform_int_distribution<int> n_d(2, max_n);
  const int n = n_d(g);
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> pos(1, n);
  std::vector<LazySwap> swaps;
  const int len = len_d(g);
  for (int i = 0; i < len; ++i) {
    int a = pos(g), b = pos(g);
    while (b == a) b = pos(g);
    swaps.emplace_back(a, b, random_unit_scalar(g, allow_surd));
  }
  return Network(n, std::move(swaps));
}

}  // namespace lts::testing
