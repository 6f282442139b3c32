#include "lts/propagate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace lts {

namespace {

int effective_jobs(int jobs) {
  if (jobs == 1) return 1;
#ifdef _OPENMP
  return jobs == 0 ? omp_get_max_threads() : jobs;
#else
  return 1;
#endif
}

void exact_row(const Network& net, int start, std::vector<Rational>& v) {
  v.assign(net.n, Rational(0));
  v[start - 1] = 1;
  for (const auto& s : net.swaps) {
    const Rational& p = s.p.as_rational();
    Rational va = v[s.a - 1], vb = v[s.b - 1];
    v[s.a - 1] = va + p * (vb - va);
    v[s.b - 1] = vb + p * (va - vb);
  }
}

void interval_row(const std::vector<PreparedSwap>& swaps, int n, int start,
                  std::vector<Interval>& v) {
  v.assign(n, Interval::point(0.0));
  v[start - 1] = Interval::point(1.0);
  for (const auto& s : swaps) {
    Interval va = v[s.a - 1], vb = v[s.b - 1];
    v[s.a - 1] = iv_add(iv_mul(s.q, va), iv_mul(s.p, vb));
    v[s.b - 1] = iv_add(iv_mul(s.q, vb), iv_mul(s.p, va));
  }
}

}  // namespace

std::vector<PreparedSwap> prepare_swaps(const Network& net, int precision_bits) {
  std::vector<PreparedSwap> out;
  out.reserve(net.swaps.size());
  for (const auto& s : net.swaps) {
    Interval p = eval_interval(s.p, precision_bits);
    Interval q = eval_interval(one_minus(s.p), precision_bits);
    out.push_back(PreparedSwap{s.a, s.b, p, q});
  }
  return out;
}

RatMatrix single_marginal_exact(const Network& net, const EngineOptions& opts) {
  if (!net.is_rational())
    throw std::invalid_argument("single_marginal_exact: network has surd probabilities");
  RatMatrix m{net.n, std::vector<Rational>(static_cast<size_t>(net.n) * net.n, Rational(0))};
  const int jobs = effective_jobs(opts.jobs);
  if (jobs == 1) {
    std::vector<Rational> v;
    for (int i = 1; i <= net.n; ++i) {
      exact_row(net, i, v);
      for (int j = 1; j <= net.n; ++j) m.at(i, j) = v[j - 1];
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 1; i <= net.n; ++i) {
      std::vector<Rational> v;
      exact_row(net, i, v);
      for (int j = 1; j <= net.n; ++j) m.at(i, j) = v[j - 1];
    }
#endif
  }
  return m;
}

IvMatrix single_marginal_interval(const Network& net, const EngineOptions& opts) {
  const auto swaps = prepare_swaps(net, opts.precision_bits);
  IvMatrix m{net.n, std::vector<Interval>(static_cast<size_t>(net.n) * net.n)};
  const int jobs = effective_jobs(opts.jobs);
  if (jobs == 1) {
    std::vector<Interval> v;
    for (int i = 1; i <= net.n; ++i) {
      interval_row(swaps, net.n, i, v);
      for (int j = 1; j <= net.n; ++j) m.at(i, j) = v[j - 1];
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 1; i <= net.n; ++i) {
      std::vector<Interval> v;
      interval_row(swaps, net.n, i, v);
      for (int j = 1; j <= net.n; ++j) m.at(i, j) = v[j - 1];
    }
#endif
  }
  return m;
}

MarginalMatrix single_marginal(const Network& net, const EngineOptions& opts) {
  if (net.is_rational()) return single_marginal_exact(net, opts);
  return single_marginal_interval(net, opts);
}

RatPairDist pair_marginal_exact(const Network& net, int x, int y) {
  if (!net.is_rational())
    throw std::invalid_argument("pair_marginal_exact: network has surd probabilities");
  if (x == y || x < 1 || y < 1 || x > net.n || y > net.n)
    throw std::invalid_argument("pair_marginal: start pair must be two distinct labels");
  RatPairDist dist{net.n, x, y,
                   std::vector<Rational>(static_cast<size_t>(net.n) * net.n, Rational(0))};
  dist.at(x, y) = 1;
  const int n = net.n;
  auto idx = [n](int u, int v) { return static_cast<size_t>(u - 1) * n + (v - 1); };
  for (const auto& s : net.swaps) {
    const Rational& p = s.p.as_rational();
    const int a = s.a, b = s.b;
    auto orbit = [&](size_t i1, size_t i2) {
      Rational u = dist.d[i1], w = dist.d[i2];
      dist.d[i1] = u + p * (w - u);
      dist.d[i2] = w + p * (u - w);
    };
    for (int k = 1; k <= n; ++k) {
      if (k == a || k == b) continue;
      orbit(idx(a, k), idx(b, k));
      orbit(idx(k, a), idx(k, b));
    }
    orbit(idx(a, b), idx(b, a));
  }
  return dist;
}

// Lower and upper endpoints advance in separate planes of plain doubles. The
// update q*u + p*w is monotone in every operand on nonnegative data, so the
// endpoint planes never interact; one outward inflation per entry covers the
// three roundings (2^-50 > 3*2^-53) and the absolute term covers underflow.
IvPairDist pair_marginal_interval(const std::vector<PreparedSwap>& swaps, int n, int x, int y) {
  if (x == y || x < 1 || y < 1 || x > n || y > n)
    throw std::invalid_argument("pair_marginal: start pair must be two distinct labels");
  constexpr double kRel = 0x1p-50;
  constexpr double kAbs = 1e-300;
  const size_t nn = static_cast<size_t>(n) * n;
  std::vector<double> lo(nn, 0.0), hi(nn, 0.0);
  auto idx = [n](int u, int v) { return static_cast<size_t>(u - 1) * n + (v - 1); };
  lo[idx(x, y)] = hi[idx(x, y)] = 1.0;
  double* L = lo.data();
  double* H = hi.data();
  for (const auto& s : swaps) {
    const int a = s.a, b = s.b;
    const double pl = s.p.lo, ph = s.p.hi, ql = s.q.lo, qh = s.q.hi;
    auto orbit = [&](size_t i1, size_t i2) {
      const double ul = L[i1], wl = L[i2], uh = H[i1], wh = H[i2];
      const double l1 = ql * ul + pl * wl;
      const double l2 = ql * wl + pl * ul;
      const double h1 = qh * uh + ph * wh;
      const double h2 = qh * wh + ph * uh;
      L[i1] = l1 - (l1 * kRel + kAbs);
      L[i2] = l2 - (l2 * kRel + kAbs);
      H[i1] = h1 + (h1 * kRel + kAbs);
      H[i2] = h2 + (h2 * kRel + kAbs);
    };
    for (int k = 1; k <= n; ++k) {
      if (k == a || k == b) continue;
      orbit(idx(a, k), idx(b, k));
      orbit(idx(k, a), idx(k, b));
    }
    orbit(idx(a, b), idx(b, a));
  }
  IvPairDist dist{n, x, y, std::vector<Interval>(nn)};
  for (size_t i = 0; i < nn; ++i) dist.d[i] = {L[i], H[i]};
  return dist;
}

IvPairDist pair_marginal_interval(const Network& net, int x, int y, const EngineOptions& opts) {
  return pair_marginal_interval(prepare_swaps(net, opts.precision_bits), net.n, x, y);
}

PairDistribution pair_marginal(const Network& net, int x, int y, const EngineOptions& opts) {
  if (net.is_rational()) return pair_marginal_exact(net, x, y);
  return pair_marginal_interval(net, x, y, opts);
}

long perm_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::vector<int> perm_unrank(int n, long rank) {
  std::vector<long> digits(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = rank % (n - i);
    rank /= (n - i);
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return perm;
}

FullDist full_distribution(const Network& net) {
  if (net.n > 7) throw std::invalid_argument("full_distribution: n too large");
  if (!net.is_rational())
    throw std::invalid_argument("full_distribution: network has surd probabilities");
  long fact = 1;
  for (int i = 2; i <= net.n; ++i) fact *= i;
  FullDist dist{net.n, std::vector<Rational>(fact, Rational(0))};
  std::vector<int> identity(net.n);
  for (int i = 0; i < net.n; ++i) identity[i] = i + 1;
  dist.p[perm_rank(identity)] = 1;

  for (const auto& s : net.swaps) {
    const Rational& p = s.p.as_rational();
    for (long r = 0; r < fact; ++r) {
      std::vector<int> perm = perm_unrank(net.n, r);
      // compose the transposition after the permutation: swap values a and b
      for (int& v : perm) {
        if (v == s.a)
          v = s.b;
        else if (v == s.b)
          v = s.a;
      }
      const long r2 = perm_rank(perm);
      if (r < r2) {
        Rational u = dist.p[r], w = dist.p[r2];
        dist.p[r] = u + p * (w - u);
        dist.p[r2] = w + p * (u - w);
      }
    }
  }
  return dist;
}

}  // namespace lts
