#pragma once

#include <variant>
#include <vector>

#include "lts/interval.hpp"
#include "lts/network.hpp"

namespace lts {

// Row i holds the position distribution of the element that starts at i, so
// entry (i, j) = P(i ends at j). Rows and columns each sum to 1.
struct RatMatrix {
  int n = 0;
  std::vector<Rational> e;  // row-major n*n

  const Rational& at(int i, int j) const { return e[(i - 1) * n + (j - 1)]; }
  Rational& at(int i, int j) { return e[(i - 1) * n + (j - 1)]; }
};

struct IvMatrix {
  int n = 0;
  std::vector<Interval> e;

  const Interval& at(int i, int j) const { return e[(i - 1) * n + (j - 1)]; }
  Interval& at(int i, int j) { return e[(i - 1) * n + (j - 1)]; }
};

using MarginalMatrix = std::variant<RatMatrix, IvMatrix>;

// Joint law of the images of two tracked start elements x != y:
// entry (u, v) = P(x ends at u and y ends at v); the diagonal stays zero.
struct RatPairDist {
  int n = 0, x = 0, y = 0;
  std::vector<Rational> d;

  const Rational& at(int u, int v) const { return d[(u - 1) * n + (v - 1)]; }
  Rational& at(int u, int v) { return d[(u - 1) * n + (v - 1)]; }
};

struct IvPairDist {
  int n = 0, x = 0, y = 0;
  std::vector<Interval> d;

  const Interval& at(int u, int v) const { return d[(u - 1) * n + (v - 1)]; }
  Interval& at(int u, int v) { return d[(u - 1) * n + (v - 1)]; }
};

using PairDistribution = std::variant<RatPairDist, IvPairDist>;

// Exact distribution over all of S_n, indexed by permutation rank; only
// feasible for small n (factorial growth), refused above n = 7.
struct FullDist {
  int n = 0;
  std::vector<Rational> p;  // size n!
};

struct EngineOptions {
  int precision_bits = 128;
  int jobs = 0;  // 0: library default, 1: serial reference, k: k threads
};

RatMatrix single_marginal_exact(const Network& net, const EngineOptions& opts = {});
IvMatrix single_marginal_interval(const Network& net, const EngineOptions& opts = {});
// exact when every probability is rational, interval otherwise
MarginalMatrix single_marginal(const Network& net, const EngineOptions& opts = {});

RatPairDist pair_marginal_exact(const Network& net, int x, int y);
IvPairDist pair_marginal_interval(const Network& net, int x, int y,
                                  const EngineOptions& opts = {});
PairDistribution pair_marginal(const Network& net, int x, int y,
                               const EngineOptions& opts = {});

// rational networks only
FullDist full_distribution(const Network& net);

// factorial-base rank of a permutation given as 1-based images; inverse below
long perm_rank(const std::vector<int>& perm);
std::vector<int> perm_unrank(int n, long rank);

// per-swap probability enclosures, shared by the interval engines and checks
struct PreparedSwap {
  int a, b;
  Interval p, q;  // q encloses 1 - p
};
std::vector<PreparedSwap> prepare_swaps(const Network& net, int precision_bits);

// pair law from pre-evaluated swaps; callers that sweep many start pairs
// prepare once and reuse
IvPairDist pair_marginal_interval(const std::vector<PreparedSwap>& swaps, int n, int x, int y);

}  // namespace lts
