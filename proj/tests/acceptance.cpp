#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <vector>

#include "lts/build.hpp"
#include "lts/certify.hpp"
#include "lts/checks.hpp"
#include "lts/propagate.hpp"
#include "lts/search.hpp"

namespace {

using namespace lts;
using acc_clock = std::chrono::steady_clock;

constexpr double kTol = 1e-9;        // verification tolerance, criteria 6 and 7
constexpr double kWidthCap = 1e-12;  // interval width ceiling, criterion 6
constexpr double kBigCheckBudget = 300.0;  // seconds for the n = 64 strong-2 check

double seconds_since(acc_clock::time_point t0) {
  return std::chrono::duration<double>(acc_clock::now() - t0).count();
}

std::string at_n(const char* what, int n) { return std::string(what) + " at n=" + std::to_string(n); }

// 1. hypercube networks on 2^t labels: pinned lengths, exact uniform marginals
bool crit1(std::string& why) {
  const long want[] = {1, 4, 12, 32, 80};
  for (int t = 1; t <= 5; ++t) {
    Network net = hypercube_strong1(t);
    if (net.n != (1 << t)) { why = at_n("wrong ground set", t); return false; }
    if (net.length() != want[t - 1] || hypercube_length(t) != want[t - 1]) {
      why = at_n("length differs from t*2^(t-1)", t);
      return false;
    }
    Verdict v = check_strong1(net);
    if (v.mode != "exact") { why = at_n("expected the exact engine", t); return false; }
    if (!v.pass) { why = at_n("marginals not exactly uniform", t); return false; }
  }
  return true;
}

// 2. strong-1 networks for all n: exact uniform marginals, length within bound
bool crit2(std::string& why) {
  for (int n = 2; n <= 64; ++n) {
    Network net = strong1(n);
    Verdict v = check_strong1(net);
    if (v.mode != "exact" || !v.pass) { why = at_n("marginals not exactly uniform", n); return false; }
    if (net.length() > strong1_length_bound(n)) {
      why = at_n("length above ceil(n log2(n)/2 + 2n)", n);
      return false;
    }
  }
  return true;
}

// 3. transversal traces on every criterion-1 and criterion-2 network
bool crit3(std::string& why) {
  std::vector<Network> nets;
  for (int t = 1; t <= 5; ++t) nets.push_back(hypercube_strong1(t));
  for (int n = 2; n <= 64; ++n) nets.push_back(strong1(n));
  for (const Network& net : nets) {
    TransversalTrace tr = transversal_certificate(net);
    if (tr.heuristic != (net.n > 8)) { why = at_n("unexpected trace mode", net.n); return false; }
    if (!tr.start_ok) { why = at_n("g(0) != 1", net.n); return false; }
    if (!tr.pass) { why = at_n("a step shrank g by more than 4", net.n); return false; }
    if (!tr.end_is_uniform) { why = at_n("final g differs from n^-n", net.n); return false; }
    if (tr.implied_lower_bound != transversal_lower_bound(net.n)) {
      why = at_n("implied bound differs from ceil(n log2(n)/2)", net.n);
      return false;
    }
    if (tr.implied_lower_bound > net.length()) { why = at_n("bound exceeds length", net.n); return false; }
  }
  return true;
}

// 4. pair shuffles: pinned length 2n-3, exact pair law, rank trace endpoints
bool crit4(std::string& why) {
  for (int n = 2; n <= 50; ++n) {
    Network net = u2_shuffle(n);
    if (net.length() != 2 * n - 3 || u2_length(n) != 2 * n - 3) {
      why = at_n("length differs from 2n-3", n);
      return false;
    }
    Verdict v = check_pair_uniform(net, 1, 2);
    if (v.mode != "exact" || !v.pass) { why = at_n("pair law not exactly uniform", n); return false; }
    RankTrace tr = rank_certificate(net);
    if (!tr.selfcheck_ok) { why = at_n("update disagrees with PMP + X", n); return false; }
    if (!tr.increments_ok) { why = at_n("an increment exceeds 1", n); return false; }
    if (tr.f_start != 3 || tr.f_end != 2 * n) { why = at_n("wrong f endpoints", n); return false; }
  }
  return true;
}

// 5. reachability: pinned lengths, exhaustive infeasibility one step shorter,
//    clique trace endpoints F(0)=2 and F(end)=3n/2
bool crit5(std::string& why) {
  for (int n = 2; n <= 40; ++n) {
    TranspositionSeq seq = reach2(n);
    if (seq.length() != reach2_length(n) || reach2_length(n) != (3 * n + 1) / 2 - 2) {
      why = at_n("length differs from ceil(3n/2)-2", n);
      return false;
    }
    if (!check_reachability(seq).pass) { why = at_n("pair does not reach every pair", n); return false; }
  }
  for (int n = 3; n <= 6; ++n) {
    const auto t0 = acc_clock::now();
    SearchReport rep = exhaust_reach2(n, reach2_length(n) - 1);
    const double dt = seconds_since(t0);
    if (!rep.exhausted || rep.feasible) { why = at_n("shorter sequence not ruled out", n); return false; }
    const double budget = n == 6 ? 600.0 : 10.0;
    if (dt > budget) { why = at_n("exhaustive search over its time budget", n); return false; }
  }
  for (int n = 2; n <= 12; ++n) {
    CliqueTrace tr = clique_certificate(reach2(n));
    if (!tr.pass || !tr.increments_ok) { why = at_n("an increment exceeds 1", n); return false; }
    if (tr.two_f_start != 4 || tr.two_f_end != 3 * n) { why = at_n("wrong F endpoints", n); return false; }
  }
  return true;
}

// 6. division shuffles: divided profile and uniform marginals certified below
//    kWidthCap, length within 3n log2(n), exact q identity per recursion level
bool crit6(std::string& why) {
  const CheckOptions opts{kTol, 128, 0};
  for (int n = 2; n <= 64; n += 2) {
    Network net = nice_division(n);
    Verdict dv = check_division(net, opts);
    if (!dv.pass) { why = at_n("divided profile violated", n); return false; }
    Verdict sv = check_strong1(net, opts);
    if (!sv.pass) { why = at_n("marginals not uniform", n); return false; }
    if (dv.max_interval_width >= kWidthCap || sv.max_interval_width >= kWidthCap) {
      why = at_n("interval width above cap", n);
      return false;
    }
    if (!division_length_ok(n, net.length())) { why = at_n("length above 3n log2(n)", n); return false; }
  }
  for (long m = 2; m <= 32; m += 2) {
    const ProbScalar q = solve_division_q(m);
    const auto prod = try_mul(q, one_minus(q));
    if (!prod || !(*prod == ProbScalar(make_rational(m, 4 * (2 * m - 1))))) {
      why = "q(1-q) != m/(4(2m-1)) at m=" + std::to_string(m);
      return false;
    }
  }
  return true;
}

// 7. strong-2 shuffles: every ordered start pair uniform at kTol, length within
//    4n (log2 n)^2, the n = 64 verification inside kBigCheckBudget
bool crit7(std::string& why) {
  const CheckOptions opts{kTol, 128, 0};
  for (int n = 1; n <= 64; ++n) {
    Network net = strong2(n);
    const auto t0 = acc_clock::now();
    Verdict v = check_strong2(net, opts);
    const double dt = seconds_since(t0);
    if (!v.pass) { why = at_n("a start pair is not uniform", n); return false; }
    if (n >= 2 && !strong2_length_ok(n, net.length())) {
      why = at_n("length above 4n (log2 n)^2", n);
      return false;
    }
    if (n == 64 && dt > kBigCheckBudget) { why = "n=64 verification over its budget"; return false; }
  }
  return true;
}

// 8. full-distribution oracle: k_tuple_shuffle(n,n) uniform on S_n, designated
//    tuple marginals uniform and equal to the engines, reversal inverts the law
bool crit8(std::string& why) {
  for (int n = 1; n <= 5; ++n) {
    if (!check_full_uniform(k_tuple_shuffle(n, n)).pass) {
      why = at_n("not uniform on the symmetric group", n);
      return false;
    }
  }
  for (int n = 1; n <= 5; ++n) {
    long nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    for (int k = 1; k <= n; ++k) {
      Network net = k_tuple_shuffle(n, k);
      FullDist full = full_distribution(net);
      std::map<std::vector<int>, Rational> mass;  // images of the tuple (n-k+1..n)
      for (long r = 0; r < nf; ++r) {
        const std::vector<int> perm = perm_unrank(n, r);
        mass[{perm.end() - k, perm.end()}] += full.p[r];
      }
      long ff = 1;
      for (int i = 0; i < k; ++i) ff *= n - i;
      if (mass.size() != static_cast<size_t>(ff)) { why = at_n("missing tuple images", n); return false; }
      const Rational target = make_rational(1, ff);
      for (const auto& [tuple, m] : mass)
        if (m != target) { why = at_n("tuple marginal not uniform", n); return false; }
      if (k == 1) {
        RatMatrix sm = single_marginal_exact(net);
        for (int u = 1; u <= n; ++u)
          if (mass[{u}] != sm.at(n, u)) { why = at_n("single engine disagrees", n); return false; }
      }
      if (k == 2) {
        RatPairDist pd = pair_marginal_exact(net, n - 1, n);
        for (int u = 1; u <= n; ++u)
          for (int v = 1; v <= n; ++v)
            if (u != v && mass[{u, v}] != pd.at(u, v)) {
              why = at_n("pair engine disagrees", n);
              return false;
            }
      }
    }
  }
  std::mt19937_64 rng(0x5eedacceULL);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int len = static_cast<int>(rng() % 7);
    std::vector<LazySwap> swaps;
    for (int i = 0; i < len; ++i) {
      const int a = 1 + static_cast<int>(rng() % n);
      int b = 1 + static_cast<int>(rng() % n);
      while (b == a) b = 1 + static_cast<int>(rng() % n);
      const long den = 1 + static_cast<long>(rng() % 16);
      swaps.emplace_back(a, b, ProbScalar(make_rational(static_cast<long>(rng() % (den + 1)), den)));
    }
    const Network net(n, std::move(swaps));
    FullDist fwd = full_distribution(net);
    FullDist rev = full_distribution(reverse_network(net));
    long nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    for (long r = 0; r < nf; ++r) {
      const std::vector<int> perm = perm_unrank(n, r);
      std::vector<int> inv(n);
      for (int i = 1; i <= n; ++i) inv[perm[i - 1] - 1] = i;
      if (rev.p[r] != fwd.p[perm_rank(inv)]) {
        why = "reversal is not the inverse pushforward, trial " + std::to_string(trial);
        return false;
      }
    }
  }
  return true;
}

// 9. scalar soundness: 128-bit enclosures contain the 256-bit ones; rational and
//    scalar serialization round-trips are exact
bool crit9(std::string& why) {
  std::mt19937_64 rng(0x5eedc0deULL);
  auto random_rational = [&](long den_cap) {
    const long den = 1 + static_cast<long>(rng() % den_cap);
    return make_rational(static_cast<long>(rng() % (den + 1)), den);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    ProbScalar x;
    if (rng() % 5 < 2) {
      x = ProbScalar(random_rational(1000000000L));
    } else {
      for (int tries = 0; tries < 32; ++tries) {
        const Rational a = random_rational(64);
        const Rational b = (rng() % 2 ? 1 : -1) * random_rational(64) / 2;
        const Rational c(1 + static_cast<long>(rng() % 1000000));
        const auto v = make_surd(a, b, c);
        const ProbScalar cand = std::holds_alternative<Surd>(v)
                                    ? ProbScalar(std::get<Surd>(v))
                                    : ProbScalar(std::get<Rational>(v));
        if (cand.in_unit()) { x = cand; break; }
      }
    }
    if (rng() % 2) x = one_minus(x);
    if (rng() % 3 == 0) {
      if (const auto m = try_mul(x, ProbScalar(random_rational(16)))) x = *m;
    }
    if (!eval_interval(x, 128).contains(eval_interval(x, 256))) {
      why = "128-bit enclosure misses the 256-bit one: " + to_string(x);
      return false;
    }
    nlohmann::json j;
    to_json(j, x);
    ProbScalar back;
    from_json(j, back);
    if (!(back == x)) { why = "scalar does not round-trip: " + to_string(x); return false; }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational num(static_cast<long>(rng() >> 1)), den(static_cast<long>(1 + (rng() >> 2)));
    const Rational r = (trial % 2 ? num : -num) / den;
    if (rational_from_string(to_string(r)) != r) {
      why = "rational does not round-trip: " + to_string(r);
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int id;
    const char* what;
    bool (*fn)(std::string&);
    double budget;  // seconds, 0 when the criterion carries only internal budgets
  };
  const Entry entries[] = {
      {1, "hypercube networks, exact uniform marginals, pinned lengths", crit1, 5.0},
      {2, "strong-1 networks up to n=64, exact check, length bound", crit2, 60.0},
      {3, "transversal traces: ratio, endpoints, implied lower bound", crit3, 0.0},
      {4, "pair shuffles of length 2n-3, exact pair law, rank trace", crit4, 60.0},
      {5, "reachability lengths, exhaustive infeasibility, clique trace", crit5, 0.0},
      {6, "division shuffles: profile, marginals, widths, q identity", crit6, 120.0},
      {7, "strong-2 shuffles: all start pairs uniform at 1e-9", crit7, 0.0},
      {8, "full-distribution oracle: uniformity, marginals, reversal", crit8, 60.0},
      {9, "interval containment across precisions, exact round-trips", crit9, 10.0},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  bool ran = false;
  for (const Entry& e : entries) {
    if (only != 0 && e.id != only) continue;
    ran = true;
    std::string why;
    const auto t0 = acc_clock::now();
    bool ok = e.fn(why);
    const double dt = seconds_since(t0);
    if (ok && e.budget > 0.0 && dt > e.budget) {
      ok = false;
      why = "over the " + std::to_string(static_cast<int>(e.budget)) + "s budget";
    }
    printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", e.id, e.what, dt,
           ok ? "" : ": ", ok ? "" : why.c_str());
    fflush(stdout);
    all_ok = all_ok && ok;
  }
  if (!ran) {
    fprintf(stderr, "usage: %s [criterion 1..9]\n", argv[0]);
    return 1;
  }
  return all_ok ? 0 : 1;
}
