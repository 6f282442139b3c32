#include "lts/checks.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>
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

// distance from a target enclosure to a computed enclosure; zero when they touch
double iv_distance(const Interval& got, const Interval& target) {
  double d = 0.0;
  if (got.lo - target.hi > d) d = got.lo - target.hi;
  if (target.lo - got.hi > d) d = target.lo - got.hi;
  return d;
}

std::string format_entry(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

struct PairOutcome {
  bool ok = true;
  double width = 0.0;
  Witness w;
};

PairOutcome uniform_pair_outcome_exact(const Network& net, int x, int y, const Rational& target) {
  PairOutcome out;
  RatPairDist dist = pair_marginal_exact(net, x, y);
  Rational worst(0);
  for (int u = 1; u <= net.n; ++u)
    for (int v = 1; v <= net.n; ++v) {
      const Rational& expect = (u == v) ? Rational(0) : target;
      const Rational dev = abs(dist.at(u, v) - expect);
      if (dev > worst) {
        worst = dev;
        out.ok = false;
        out.w = Witness{{x, y}, format_entry(u, v), to_string(expect), to_string(dist.at(u, v))};
      }
    }
  return out;
}

PairOutcome uniform_pair_outcome_interval(const std::vector<PreparedSwap>& swaps, int n, int x,
                                          int y, const Interval& target,
                                          const std::string& target_str, double tol) {
  PairOutcome out;
  IvPairDist dist = pair_marginal_interval(swaps, n, x, y);
  const Interval zero = Interval::point(0.0);
  double worst = tol;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      const Interval& got = dist.at(u, v);
      if (got.width() > out.width) out.width = got.width();
      const Interval& expect = (u == v) ? zero : target;
      const double dev = iv_distance(got, expect);
      if (dev > worst) {
        worst = dev;
        out.ok = false;
        out.w = Witness{{x, y}, format_entry(u, v), (u == v) ? "0" : target_str, to_string(got)};
      }
    }
  return out;
}

// The joint law of (y, x) is the transpose of the joint law of (x, y), and the
// uniform-pair and division targets are transpose-invariant, so checking the
// pairs with x < y covers every ordered pair.
std::vector<std::pair<int, int>> unordered_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);
  return pairs;
}

// deterministic merge of per-pair outcomes: first failing pair in list order wins
Verdict merge_pair_outcomes(Verdict v, const std::vector<PairOutcome>& outcomes) {
  v.pass = true;
  for (const auto& o : outcomes) {
    if (o.width > v.max_interval_width) v.max_interval_width = o.width;
    if (v.pass && !o.ok) {
      v.pass = false;
      v.witness = o.w;
    }
  }
  return v;
}

}  // namespace

Verdict check_strong1(const Network& net, const CheckOptions& opts) {
  Verdict v;
  v.check = "strong1";
  v.tolerance = opts.tol;
  const Rational target = make_rational(1, net.n);
  if (net.is_rational()) {
    v.mode = "exact";
    RatMatrix m = single_marginal_exact(net, {opts.precision_bits, opts.jobs});
    v.pass = true;
    Rational worst(0);
    for (int i = 1; i <= net.n; ++i)
      for (int j = 1; j <= net.n; ++j) {
        const Rational dev = abs(m.at(i, j) - target);
        if (dev > worst) {
          worst = dev;
          v.pass = false;
          v.witness = Witness{{}, format_entry(i, j), to_string(target), to_string(m.at(i, j))};
        }
      }
  } else {
    v.mode = "interval";
    IvMatrix m = single_marginal_interval(net, {opts.precision_bits, opts.jobs});
    const Interval t = eval_interval(target, 128);
    v.pass = true;
    double worst = opts.tol;
    for (int i = 1; i <= net.n; ++i)
      for (int j = 1; j <= net.n; ++j) {
        const Interval& got = m.at(i, j);
        if (got.width() > v.max_interval_width) v.max_interval_width = got.width();
        const double dev = iv_distance(got, t);
        if (dev > worst) {
          worst = dev;
          v.pass = false;
          v.witness = Witness{{}, format_entry(i, j), to_string(target), to_string(got)};
        }
      }
  }
  return v;
}

Verdict check_pair_uniform(const Network& net, int x, int y, const CheckOptions& opts) {
  if (net.n < 2) throw std::invalid_argument("pair check: need at least two labels");
  Verdict v;
  v.check = "pair";
  v.tolerance = opts.tol;
  const Rational target = make_rational(1, static_cast<long>(net.n) * (net.n - 1));
  std::vector<PairOutcome> outcomes;
  if (net.is_rational()) {
    v.mode = "exact";
    outcomes.push_back(uniform_pair_outcome_exact(net, x, y, target));
  } else {
    v.mode = "interval";
    const auto swaps = prepare_swaps(net, opts.precision_bits);
    outcomes.push_back(
        uniform_pair_outcome_interval(swaps, net.n, x, y, eval_interval(target, 128),
                                      to_string(target), opts.tol));
  }
  return merge_pair_outcomes(std::move(v), outcomes);
}

Verdict check_strong2(const Network& net, const CheckOptions& opts) {
  Verdict v;
  v.check = "strong2";
  v.tolerance = opts.tol;
  const auto pairs = unordered_pairs(net.n);
  std::vector<PairOutcome> outcomes(pairs.size());
  const int jobs = effective_jobs(opts.jobs);
  if (net.is_rational()) {
    v.mode = "exact";
    const Rational target =
        net.n < 2 ? Rational(0) : make_rational(1, static_cast<long>(net.n) * (net.n - 1));
    if (jobs == 1) {
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = uniform_pair_outcome_exact(net, pairs[k].first, pairs[k].second, target);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = uniform_pair_outcome_exact(net, pairs[k].first, pairs[k].second, target);
#endif
    }
  } else {
    v.mode = "interval";
    const auto swaps = prepare_swaps(net, opts.precision_bits);
    const Rational target_q = make_rational(1, static_cast<long>(net.n) * (net.n - 1));
    const Interval target = eval_interval(target_q, 128);
    const std::string target_str = to_string(target_q);
    if (jobs == 1) {
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = uniform_pair_outcome_interval(swaps, net.n, pairs[k].first, pairs[k].second,
                                                    target, target_str, opts.tol);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = uniform_pair_outcome_interval(swaps, net.n, pairs[k].first, pairs[k].second,
                                                    target, target_str, opts.tol);
#endif
    }
  }
  return merge_pair_outcomes(std::move(v), outcomes);
}

namespace {

struct DivisionTargets {
  Rational corner;    // both-low and both-high: 1/4 - 1/(4(n-1))
  Rational crossing;  // each orientation:       1/4 + 1/(4(n-1))
};

DivisionTargets division_targets(int n) {
  return {make_rational(n - 2, 4L * (n - 1)), make_rational(n, 4L * (n - 1))};
}

const char* kAggNames[4] = {"both-low", "low-high", "high-low", "both-high"};

PairOutcome division_outcome_exact(const Network& net, int x, int y, const DivisionTargets& t) {
  PairOutcome out;
  RatPairDist dist = pair_marginal_exact(net, x, y);
  const int half = net.n / 2;
  Rational agg[4];
  for (int u = 1; u <= net.n; ++u)
    for (int v = 1; v <= net.n; ++v) {
      const int bucket = (u <= half ? 0 : 2) + (v <= half ? 0 : 1);
      agg[bucket] += dist.at(u, v);
    }
  const Rational expected[4] = {t.corner, t.crossing, t.crossing, t.corner};
  Rational worst(0);
  for (int k = 0; k < 4; ++k) {
    const Rational dev = abs(agg[k] - expected[k]);
    if (dev > worst) {
      worst = dev;
      out.ok = false;
      out.w = Witness{{x, y}, kAggNames[k], to_string(expected[k]), to_string(agg[k])};
    }
  }
  return out;
}

PairOutcome division_outcome_interval(const std::vector<PreparedSwap>& swaps, int n, int x, int y,
                                      const Interval targets[4], double tol) {
  PairOutcome out;
  IvPairDist dist = pair_marginal_interval(swaps, n, x, y);
  const int half = n / 2;
  std::vector<Interval> buckets[4];
  for (auto& b : buckets) b.reserve(static_cast<size_t>(half) * half);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      buckets[(u <= half ? 0 : 2) + (v <= half ? 0 : 1)].push_back(dist.at(u, v));
  double worst = tol;
  for (int k = 0; k < 4; ++k) {
    const Interval agg = pairwise_sum(buckets[k]);
    if (agg.width() > out.width) out.width = agg.width();
    const double dev = iv_distance(agg, targets[k]);
    if (dev > worst) {
      worst = dev;
      out.ok = false;
      out.w = Witness{{x, y}, kAggNames[k], "divided profile", to_string(agg)};
    }
  }
  return out;
}

}  // namespace

Verdict check_division(const Network& net, const CheckOptions& opts) {
  if (net.n % 2 != 0) throw std::invalid_argument("division check: even ground set required");
  Verdict v;
  v.check = "division";
  v.tolerance = opts.tol;
  const DivisionTargets t = division_targets(net.n);
  const auto pairs = unordered_pairs(net.n);
  std::vector<PairOutcome> outcomes(pairs.size());
  const int jobs = effective_jobs(opts.jobs);
  if (net.is_rational()) {
    v.mode = "exact";
    if (jobs == 1) {
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = division_outcome_exact(net, pairs[k].first, pairs[k].second, t);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = division_outcome_exact(net, pairs[k].first, pairs[k].second, t);
#endif
    }
  } else {
    v.mode = "interval";
    const auto swaps = prepare_swaps(net, opts.precision_bits);
    const Interval targets[4] = {eval_interval(t.corner, 128), eval_interval(t.crossing, 128),
                                 eval_interval(t.crossing, 128), eval_interval(t.corner, 128)};
    if (jobs == 1) {
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = division_outcome_interval(swaps, net.n, pairs[k].first, pairs[k].second,
                                                targets, opts.tol);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (size_t k = 0; k < pairs.size(); ++k)
        outcomes[k] = division_outcome_interval(swaps, net.n, pairs[k].first, pairs[k].second,
                                                targets, opts.tol);
#endif
    }
  }
  v.details["crossing-target-each"] = to_string(t.crossing);
  v.details["crossing-target-summed"] = to_string(Rational(2 * t.crossing));
  return merge_pair_outcomes(std::move(v), outcomes);
}

Verdict check_full_uniform(const Network& net, const CheckOptions& opts) {
  Verdict v;
  v.check = "full";
  v.mode = "exact";
  v.tolerance = opts.tol;
  FullDist dist = full_distribution(net);
  Rational target(1);
  for (int i = 2; i <= net.n; ++i) target /= i;
  v.pass = true;
  Rational worst(0);
  for (size_t r = 0; r < dist.p.size(); ++r) {
    const Rational dev = abs(dist.p[r] - target);
    if (dev > worst) {
      worst = dev;
      v.pass = false;
      v.witness = Witness{{}, "perm rank " + std::to_string(r), to_string(target),
                          to_string(dist.p[r])};
    }
  }
  return v;
}

Verdict check_reachability(const TranspositionSeq& seq) {
  Verdict v;
  v.check = "reach";
  v.mode = "exact";
  ReachDigraph g = reach_digraph(seq);
  v.pass = g.complete();
  v.details["edges"] = std::to_string(g.edge_count());
  if (!v.pass) {
    for (int i = 1; i <= seq.n && !v.witness; ++i)
      for (int j = 1; j <= seq.n; ++j)
        if (i != j && !g.edge(i, j)) {
          v.witness = Witness{{i, j}, format_entry(i, j), "reachable", "missing"};
          break;
        }
  }
  return v;
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = nlohmann::json{{"pair", w.pair}, {"entry", w.entry}, {"expected", w.expected},
                     {"got", w.got}};
}

void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"check", v.check},
                     {"mode", v.mode},
                     {"pass", v.pass},
                     {"tolerance", v.tolerance},
                     {"max_interval_width", v.max_interval_width}};
  if (v.witness) j["witness"] = *v.witness;
  if (!v.details.empty()) j["details"] = v.details;
}

}  // namespace lts
