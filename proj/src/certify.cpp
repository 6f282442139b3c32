#include "lts/certify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lts/reach.hpp"

namespace lts {

namespace {

// slack for comparisons on log2 values computed from interval midpoints
constexpr double kLogSlack = 1e-9;
// tolerance for matching the uniform endpoint -n*log2(n) in heuristic mode
constexpr double kLogEndTol = 1e-6;

// rank of the submatrix rows x cols of the n x n matrix m, exact elimination
int rational_rank(const std::vector<Rational>& m, int n, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(nr) * nc);
  for (int r : rows)
    for (int c : cols) a.push_back(m[static_cast<std::size_t>(r) * n + c]);
  int rank = 0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (a[static_cast<std::size_t>(r) * nc + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = c; j < nc; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * nc + j],
                  a[static_cast<std::size_t>(rank) * nc + j]);
    const std::size_t pr = static_cast<std::size_t>(rank) * nc;
    for (int r = rank + 1; r < nr; ++r) {
      const std::size_t rr = static_cast<std::size_t>(r) * nc;
      if (a[rr + c] == 0) continue;
      const Rational f = a[rr + c] / a[pr + c];
      a[rr + c] = 0;
      for (int j = c + 1; j < nc; ++j)
        if (a[pr + j] != 0) a[rr + j] -= f * a[pr + j];
    }
    ++rank;
  }
  return rank;
}

// smallest L >= 0 with 4^L >= ratio
long pow4_cover(const Rational& ratio) {
  if (ratio <= 1) return 0;
  const BigInt num = ratio.get_num();
  const BigInt den = ratio.get_den();
  long level = 0;
  BigInt pw = 1;
  while (pw * den < num) {
    pw *= 4;
    ++level;
  }
  return level;
}

// min-cost perfect assignment via potentials; cost(i, j) callable, 1-based
template <class Cost>
double assignment_min_cost(int n, Cost cost) {
  constexpr double kInf = 1e100;
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) total += cost(p[j], j);
  return total;
}

// largest product of one entry per row, columns distinct, exact; 0 when every
// bijection hits a zero
Rational max_bijection_product(const std::vector<Rational>& m, int n) {
  Rational best(0);
  auto rec = [&](auto&& self, int i, unsigned used, const Rational& prod) -> void {
    if (i == n) {
      if (prod > best) best = prod;
      return;
    }
    const std::size_t row = static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      const Rational& e = m[row + j];
      if (e == 0) continue;
      self(self, i + 1, used | (1u << j), prod * e);
    }
  };
  rec(rec, 0, 0u, Rational(1));
  return best;
}

// max clique over the candidate mask; adj holds symmetric neighbor masks
void grow_clique(const std::array<std::uint32_t, 16>& adj, std::uint32_t cand, int size,
                 int& best) {
  if (size > best) best = size;
  while (cand != 0) {
    if (size + std::popcount(cand) <= best) return;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    grow_clique(adj, cand & adj[v], size + 1, best);
  }
}

}  // namespace

RankTrace rank_certificate(const Network& net, int x, int y) {
  const int n = net.n;
  if (n < 2) throw std::invalid_argument("rank certificate needs n >= 2");
  if (x < 1 || x > n || y < 1 || y > n || x == y)
    throw std::invalid_argument("tracked pair out of range");
  if (!net.is_rational())
    throw std::invalid_argument(
        "rank certificate needs exact rational probabilities; this network has surd entries");

  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<Rational> m(nn, Rational(0));
  m[static_cast<std::size_t>(x - 1) * n + (y - 1)] = 1;

  RankTrace tr;
  tr.n = n;
  tr.x = x;
  tr.y = y;
  tr.selfcheck_ok = true;
  tr.increments_ok = true;

  auto record = [&](int t) {
    std::vector<char> rownz(n, 0), colnz(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[static_cast<std::size_t>(i) * n + j] != 0) {
          rownz[i] = 1;
          colnz[j] = 1;
        }
    std::vector<int> rows, cols;
    int support = 0;
    for (int i = 0; i < n; ++i) {
      if (rownz[i] || colnz[i]) ++support;
      if (rownz[i]) rows.push_back(i);
      if (colnz[i]) cols.push_back(i);
    }
    const int rank = rational_rank(m, n, rows, cols);
    const int f = support + rank;
    const int inc = tr.steps.empty() ? 0 : f - tr.steps.back().f;
    if (!tr.steps.empty() && inc > 1) tr.increments_ok = false;
    tr.steps.push_back({t, support, rank, f, inc});
  };

  record(0);
  for (std::size_t s = 0; s < net.swaps.size(); ++s) {
    const LazySwap& sw = net.swaps[s];
    const Rational p = sw.p.as_rational();
    const Rational q = 1 - p;
    const int a = sw.a - 1;
    const int b = sw.b - 1;
    auto at = [&](const std::vector<Rational>& mm, int i, int j) -> const Rational& {
      return mm[static_cast<std::size_t>(i) * n + j];
    };

    // direct one-step update of the pair matrix
    std::vector<Rational> next = m;
    for (int j = 0; j < n; ++j) {
      if (j == a || j == b) continue;
      next[static_cast<std::size_t>(a) * n + j] = q * at(m, a, j) + p * at(m, b, j);
      next[static_cast<std::size_t>(b) * n + j] = q * at(m, b, j) + p * at(m, a, j);
      next[static_cast<std::size_t>(j) * n + a] = q * at(m, j, a) + p * at(m, j, b);
      next[static_cast<std::size_t>(j) * n + b] = q * at(m, j, b) + p * at(m, j, a);
    }
    next[static_cast<std::size_t>(a) * n + a] = 0;
    next[static_cast<std::size_t>(b) * n + b] = 0;
    next[static_cast<std::size_t>(a) * n + b] = q * at(m, a, b) + p * at(m, b, a);
    next[static_cast<std::size_t>(b) * n + a] = q * at(m, b, a) + p * at(m, a, b);

    // independent recomputation: conjugate by the swap's one-step stochastic
    // matrix (mix rows a, b, then columns a, b), then add the rank-one
    // correction +-p(1-p)(M_ab + M_ba) on the four affected entries
    std::vector<Rational> conj = m;
    for (int j = 0; j < n; ++j) {
      const Rational ra = q * at(m, a, j) + p * at(m, b, j);
      const Rational rb = q * at(m, b, j) + p * at(m, a, j);
      conj[static_cast<std::size_t>(a) * n + j] = ra;
      conj[static_cast<std::size_t>(b) * n + j] = rb;
    }
    for (int i = 0; i < n; ++i) {
      const Rational ca = q * at(conj, i, a) + p * at(conj, i, b);
      const Rational cb = q * at(conj, i, b) + p * at(conj, i, a);
      conj[static_cast<std::size_t>(i) * n + a] = ca;
      conj[static_cast<std::size_t>(i) * n + b] = cb;
    }
    const Rational corr = p * q * (at(m, a, b) + at(m, b, a));
    conj[static_cast<std::size_t>(a) * n + a] -= corr;
    conj[static_cast<std::size_t>(b) * n + b] -= corr;
    conj[static_cast<std::size_t>(a) * n + b] += corr;
    conj[static_cast<std::size_t>(b) * n + a] += corr;
    if (conj != next) tr.selfcheck_ok = false;

    m = std::move(next);
    record(static_cast<int>(s) + 1);
  }

  tr.f_start = tr.steps.front().f;
  tr.f_end = tr.steps.back().f;
  tr.implied_lower_bound = tr.f_end - tr.f_start;
  tr.pass = tr.selfcheck_ok && tr.increments_ok;
  return tr;
}

TransversalTrace transversal_certificate(const Network& net, const CheckOptions& opts) {
  const int n = net.n;
  if (n < 1) throw std::invalid_argument("transversal certificate needs n >= 1");
  TransversalTrace tr;
  tr.n = n;
  tr.heuristic = !(net.is_rational() && n <= 8);

  if (!tr.heuristic) {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<Rational> m(nn, Rational(0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;

    std::vector<Rational> gs;
    auto record = [&](int t) {
      const Rational g = max_bijection_product(m, n);
      bool ratio_ok = true;
      if (!gs.empty()) ratio_ok = 4 * g >= gs.back();
      gs.push_back(g);
      tr.steps.push_back({t, to_string(g), std::log2(g.get_d()), ratio_ok});
    };

    record(0);
    for (std::size_t s = 0; s < net.swaps.size(); ++s) {
      const LazySwap& sw = net.swaps[s];
      const Rational p = sw.p.as_rational();
      const Rational q = 1 - p;
      const int a = sw.a - 1;
      const int b = sw.b - 1;
      for (int i = 0; i < n; ++i) {
        Rational& va = m[static_cast<std::size_t>(i) * n + a];
        Rational& vb = m[static_cast<std::size_t>(i) * n + b];
        const Rational na = q * va + p * vb;
        vb = q * vb + p * va;
        va = na;
      }
      record(static_cast<int>(s) + 1);
    }

    tr.start_ok = gs.front() == 1;
    tr.end_is_uniform = gs.back() == rational_pow(make_rational(1, n), static_cast<unsigned long>(n));
    bool ratios = true;
    for (const auto& st : tr.steps) ratios = ratios && st.ratio_ok;
    tr.pass = tr.start_ok && ratios;
    tr.implied_lower_bound = gs.back() > 0 ? pow4_cover(gs.front() / gs.back()) : 0;
    return tr;
  }

  const auto prepared = prepare_swaps(net, opts.precision_bits);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<Interval> m(nn, Interval::point(0.0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = Interval::point(1.0);

  constexpr double kForbidden = 1e50;  // no bijection through a zero entry
  std::vector<double> logs;
  auto record = [&](int t) {
    std::vector<double> cost(nn);
    for (std::size_t k = 0; k < nn; ++k) {
      const double mid = m[k].mid();
      cost[k] = mid > 0.0 ? -std::log2(mid) : kForbidden;
    }
    const double total = assignment_min_cost(n, [&](int i, int j) {
      return cost[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    });
    const double g = -total;
    bool ratio_ok = true;
    if (!logs.empty()) ratio_ok = g >= logs.back() - 2.0 - kLogSlack;
    logs.push_back(g);
    tr.steps.push_back({t, std::string(), g, ratio_ok});
  };

  record(0);
  for (std::size_t s = 0; s < prepared.size(); ++s) {
    const PreparedSwap& sw = prepared[s];
    const int a = sw.a - 1;
    const int b = sw.b - 1;
    for (int i = 0; i < n; ++i) {
      Interval& va = m[static_cast<std::size_t>(i) * n + a];
      Interval& vb = m[static_cast<std::size_t>(i) * n + b];
      const Interval na = iv_add(iv_mul(sw.q, va), iv_mul(sw.p, vb));
      vb = iv_add(iv_mul(sw.q, vb), iv_mul(sw.p, va));
      va = na;
    }
    record(static_cast<int>(s) + 1);
  }

  tr.start_ok = std::fabs(logs.front()) <= kLogSlack;
  tr.end_is_uniform = std::fabs(logs.back() + n * std::log2(double(n))) <= kLogEndTol;
  bool ratios = true;
  for (const auto& st : tr.steps) ratios = ratios && st.ratio_ok;
  tr.pass = tr.start_ok && ratios;
  const double drop = (logs.front() - logs.back()) / 2.0 - kLogSlack;
  tr.implied_lower_bound = drop > 0 ? static_cast<long>(std::ceil(drop)) : 0;
  return tr;
}

CliqueTrace clique_certificate(const TranspositionSeq& seq) {
  const int n = seq.n;
  if (n < 2) throw std::invalid_argument("clique certificate needs n >= 2");
  if (n > 16) throw std::invalid_argument("clique certificate limited to n <= 16");

  ReachDigraph d = ReachDigraph::initial(n);
  CliqueTrace tr;
  tr.n = n;
  tr.increments_ok = true;

  auto record = [&](int t) {
    std::uint32_t eligible = 0;
    int f1 = 0;
    for (int i = 1; i <= n; ++i) {
      bool out = false, in = false;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        out = out || d.edge(i, j);
        in = in || d.edge(j, i);
      }
      if (out || in) ++f1;
      if (out && in) eligible |= 1u << (i - 1);
    }
    std::array<std::uint32_t, 16> adj{};
    for (int i = 1; i <= n; ++i) {
      if (!((eligible >> (i - 1)) & 1u)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (!((eligible >> (j - 1)) & 1u)) continue;
        if (d.edge(i, j) || d.edge(j, i)) {
          adj[i - 1] |= 1u << (j - 1);
          adj[j - 1] |= 1u << (i - 1);
        }
      }
    }
    int f2 = 0;
    grow_clique(adj, eligible, 0, f2);
    const int two_f = 2 * f1 + f2;
    const int inc = tr.steps.empty() ? 0 : two_f - tr.steps.back().two_f;
    if (!tr.steps.empty() && inc > 2) tr.increments_ok = false;
    tr.steps.push_back({t, f1, f2, two_f, inc});
  };

  record(0);
  for (std::size_t s = 0; s < seq.swaps.size(); ++s) {
    d.apply_swap(seq.swaps[s].first, seq.swaps[s].second);
    record(static_cast<int>(s) + 1);
  }

  tr.two_f_start = tr.steps.front().two_f;
  tr.two_f_end = tr.steps.back().two_f;
  tr.implied_lower_bound = (tr.two_f_end - tr.two_f_start + 1) / 2;
  tr.pass = tr.increments_ok;
  return tr;
}

void to_json(nlohmann::json& j, const RankTrace& tr) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : tr.steps)
    steps.push_back({{"t", s.t},
                     {"support", s.support},
                     {"rank", s.rank},
                     {"f", s.f},
                     {"increment", s.increment}});
  j = nlohmann::json{{"invariant", "rank"},
                     {"n", tr.n},
                     {"pair", {tr.x, tr.y}},
                     {"steps", std::move(steps)},
                     {"endpoints", {{"start", tr.f_start}, {"end", tr.f_end}}},
                     {"selfcheck", tr.selfcheck_ok},
                     {"increments_ok", tr.increments_ok},
                     {"implied_lower_bound", tr.implied_lower_bound},
                     {"verdict", tr.pass ? "pass" : "fail"}};
}

void to_json(nlohmann::json& j, const TransversalTrace& tr) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : tr.steps) {
    nlohmann::json st{{"t", s.t}, {"log2_g", s.log2_g}, {"ratio_ok", s.ratio_ok}};
    if (!s.g.empty()) st["g"] = s.g;
    steps.push_back(std::move(st));
  }
  nlohmann::json endpoints;
  if (!tr.heuristic) {
    endpoints = {{"start", tr.steps.front().g}, {"end", tr.steps.back().g}};
  } else {
    endpoints = {{"start_log2", tr.steps.front().log2_g}, {"end_log2", tr.steps.back().log2_g}};
  }
  j = nlohmann::json{{"invariant", "transversal"},
                     {"n", tr.n},
                     {"mode", tr.heuristic ? "heuristic" : "exact"},
                     {"steps", std::move(steps)},
                     {"endpoints", std::move(endpoints)},
                     {"start_ok", tr.start_ok},
                     {"end_is_uniform", tr.end_is_uniform},
                     {"implied_lower_bound", tr.implied_lower_bound},
                     {"verdict", tr.pass ? "pass" : "fail"}};
}

void to_json(nlohmann::json& j, const CliqueTrace& tr) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : tr.steps)
    steps.push_back({{"t", s.t},
                     {"f1", s.f1},
                     {"f2", s.f2},
                     {"F", s.two_f / 2.0},
                     {"increment", s.two_increment / 2.0}});
  j = nlohmann::json{
      {"invariant", "clique"},
      {"n", tr.n},
      {"steps", std::move(steps)},
      {"endpoints", {{"start", tr.two_f_start / 2.0}, {"end", tr.two_f_end / 2.0}}},
      {"increments_ok", tr.increments_ok},
      {"implied_lower_bound", tr.implied_lower_bound},
      {"verdict", tr.pass ? "pass" : "fail"}};
}

}  // namespace lts
