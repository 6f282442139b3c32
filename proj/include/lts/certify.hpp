#pragma once

#include <nlohmann/json_fwd.hpp>

#include "lts/checks.hpp"

namespace lts {

// Tracks f(t) = |S(t)| + rank(M(t)) for the pair matrix M started as a unit at
// (x, y). Each lazy swap raises f by at most 1, so any network whose pair law
// reaches full support and full rank needs at least f(end) - f(start) swaps.
struct RankTrace {
  int n = 0, x = 0, y = 0;
  struct Step {
    int t;
    int support;
    int rank;
    int f;
    int increment;  // f(t) - f(t-1), zero at t = 0
  };
  std::vector<Step> steps;
  bool selfcheck_ok = false;   // direct update equals PMP + X at every step
  bool increments_ok = false;  // every increment <= 1
  int f_start = 0, f_end = 0;
  long implied_lower_bound = 0;  // f_end - f_start
  bool pass = false;             // selfcheck_ok && increments_ok
};

// requires exact rational probabilities
RankTrace rank_certificate(const Network& net, int x = 1, int y = 2);

// Tracks g(t), the largest probability of any single deterministic outcome map
// (max over bijections of the product of per-element marginals). One lazy swap
// can shrink g by at most a factor 4, and a fully uniform marginal forces
// g(end) = n^-n, so such networks need at least ceil(n log2(n) / 2) swaps.
// Exact mode enumerates bijections (n <= 8, rational networks); otherwise an
// assignment solver on interval midpoints produces an uncertified trace.
struct TransversalTrace {
  int n = 0;
  bool heuristic = false;
  struct Step {
    int t;
    std::string g;   // exact rational, empty in heuristic mode
    double log2_g;   // exact: rounded; heuristic: assignment value
    bool ratio_ok;   // g(t) >= g(t-1) / 4
  };
  std::vector<Step> steps;
  bool start_ok = false;        // g(0) = 1
  bool end_is_uniform = false;  // g(end) = n^-n (within tol in heuristic mode)
  long implied_lower_bound = 0;
  bool pass = false;  // start_ok && all ratios
};

TransversalTrace transversal_certificate(const Network& net, const CheckOptions& opts = {});

// Tracks F(t) = f1 + f2/2 over the reachability digraph, where f1 counts the
// vertices touched by any edge and f2 is the largest clique of mutually
// semi-adjacent vertices that each have both in- and out-edges. One swap raises
// F by at most 1; completeness forces F(end) = 3n/2, giving ceil(3n/2) - 2.
struct CliqueTrace {
  int n = 0;
  struct Step {
    int t;
    int f1;
    int f2;
    int two_f;          // 2 F(t), kept integral
    int two_increment;  // 2 (F(t) - F(t-1))
  };
  std::vector<Step> steps;
  bool increments_ok = false;  // every two_increment <= 2
  int two_f_start = 0, two_f_end = 0;
  long implied_lower_bound = 0;  // ceil(F_end - F_start)
  bool pass = false;
};

// n <= 16 (exhaustive clique search)
CliqueTrace clique_certificate(const TranspositionSeq& seq);

void to_json(nlohmann::json& j, const RankTrace& tr);
void to_json(nlohmann::json& j, const TransversalTrace& tr);
void to_json(nlohmann::json& j, const CliqueTrace& tr);

}  // namespace lts
