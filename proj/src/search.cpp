#include "lts/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lts/build.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lts {

namespace {

// digraph on [0, n) packed into one word: bit i*n + j = edge (i, j); n <= 7
using Mask = std::uint64_t;

struct Geometry {
  int n;
  Mask rowall;    // low n bits
  Mask colstep;   // bit i*n for each row i
  Mask complete;  // every off-diagonal bit
  std::vector<std::pair<int, int>> moves;   // all unordered position pairs, 0-based
  std::vector<std::vector<int>> relabels;   // permutations of [0, n) fixing 0 and 1
};

Geometry make_geometry(int n) {
  Geometry g;
  g.n = n;
  g.rowall = (Mask(1) << n) - 1;
  g.colstep = 0;
  for (int i = 0; i < n; ++i) g.colstep |= Mask(1) << (i * n);
  g.complete = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.complete |= Mask(1) << (i * n + j);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.moves.emplace_back(a, b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    g.relabels.push_back(perm);
  } while (std::next_permutation(perm.begin() + std::min(n, 2), perm.end()));
  return g;
}

// one lazy transposition at 0-based (a, b), reading the pre-step snapshot
Mask swap_update(const Geometry& geo, Mask old, int a, int b) {
  const int n = geo.n;
  const Mask keep =
      old & ~((geo.rowall << (a * n)) | (geo.rowall << (b * n)) | (geo.colstep << a) |
              (geo.colstep << b));
  const Mask ru =
      (((old >> (a * n)) | (old >> (b * n))) & geo.rowall) & ~((Mask(1) << a) | (Mask(1) << b));
  const Mask rows = (ru << (a * n)) | (ru << (b * n));
  Mask cu = ((old >> a) | (old >> b)) & geo.colstep;
  cu &= ~((Mask(1) << (a * n)) | (Mask(1) << (b * n)));
  const Mask cols = (cu << a) | (cu << b);
  Mask pair = 0;
  const Mask pairbits = (Mask(1) << (a * n + b)) | (Mask(1) << (b * n + a));
  if (old & pairbits) pair = pairbits;
  return keep | rows | cols | pair;
}

// least relabeled image over the stored permutations
Mask canonical(const Geometry& geo, Mask g) {
  const int n = geo.n;
  Mask best = ~Mask(0);
  for (const auto& perm : geo.relabels) {
    Mask img = 0;
    Mask rest = g;
    while (rest != 0) {
      const int bit = std::countr_zero(rest);
      rest &= rest - 1;
      img |= Mask(1) << (perm[bit / n] * n + perm[bit % n]);
    }
    if (img < best) best = img;
  }
  return best;
}

struct DfsCtx {
  const Geometry* geo;
  std::unordered_map<Mask, int> memo;  // canon -> largest budget proven insufficient
  unsigned long long nodes = 0;
  unsigned long long max_nodes = 0;
  bool aborted = false;
  std::vector<int> path;
};

bool dfs(DfsCtx& c, Mask g, int budget) {
  const Geometry& geo = *c.geo;
  if ((g & geo.complete) == geo.complete) return true;
  if (budget == 0) return false;
  if (c.max_nodes != 0 && c.nodes >= c.max_nodes) {
    c.aborted = true;
    return false;
  }
  ++c.nodes;
  const Mask canon = canonical(geo, g);
  if (auto it = c.memo.find(canon); it != c.memo.end() && it->second >= budget) return false;
  for (std::size_t mi = 0; mi < geo.moves.size(); ++mi) {
    const Mask h = swap_update(geo, g, geo.moves[mi].first, geo.moves[mi].second);
    if (h == g) continue;  // shorter sequences are in scope, so no-ops add nothing
    c.path.push_back(static_cast<int>(mi));
    if (dfs(c, h, budget - 1)) return true;
    c.path.pop_back();
    if (c.aborted) return false;
  }
  int& slot = c.memo[canon];
  if (budget > slot) slot = budget;
  return false;
}

TranspositionSeq path_to_seq(const Geometry& geo, const std::vector<int>& path) {
  std::vector<std::pair<int, int>> moves;
  moves.reserve(path.size());
  for (int mi : path)
    moves.emplace_back(geo.moves[mi].first + 1, geo.moves[mi].second + 1);
  return TranspositionSeq(geo.n, std::move(moves));
}

int effective_jobs(int jobs) {
  if (jobs == 1) return 1;
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace

std::string SearchReport::verdict() const {
  if (feasible) return "feasible";
  return exhausted ? "infeasible" : "inconclusive";
}

SearchReport exhaust_reach2(int n, int length, const SearchOptions& opts) {
  if (n < 2 || n > 7 || length < 0 || length > 9)
    throw std::invalid_argument("search limited to 2 <= n <= 7 and length <= 9");

  const Geometry geo = make_geometry(n);
  const Mask start = Mask(1) << 1;  // edge (1, 2) as 0-based (0, 1)

  SearchReport rep;
  rep.n = n;
  rep.length = length;

  if ((start & geo.complete) == geo.complete) {
    rep.feasible = true;
    rep.exhausted = true;
    rep.witness = TranspositionSeq(n, {});
    return rep;
  }

  const int jobs = effective_jobs(opts.jobs);
  if (jobs == 1 || length == 0) {
    DfsCtx c;
    c.geo = &geo;
    c.max_nodes = opts.max_nodes;
    rep.feasible = dfs(c, start, length);
    rep.nodes = c.nodes;
    rep.exhausted = !c.aborted;
    if (rep.feasible) rep.witness = path_to_seq(geo, c.path);
    return rep;
  }

  // fan out over the first move; each branch keeps its own memo
  const int nm = static_cast<int>(geo.moves.size());
  std::vector<char> found(nm, 0), aborted(nm, 0);
  std::vector<unsigned long long> nodes(nm, 0);
  std::vector<std::vector<int>> paths(nm);
  const unsigned long long branch_cap = opts.max_nodes == 0 ? 0 : opts.max_nodes / nm + 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int mi = 0; mi < nm; ++mi) {
    const Mask h = swap_update(geo, start, geo.moves[mi].first, geo.moves[mi].second);
    if (h == start) continue;
    DfsCtx c;
    c.geo = &geo;
    c.max_nodes = branch_cap;
    c.path.push_back(mi);
    found[mi] = dfs(c, h, length - 1) ? 1 : 0;
    aborted[mi] = c.aborted ? 1 : 0;
    nodes[mi] = c.nodes;
    if (found[mi]) paths[mi] = c.path;
  }
  rep.nodes = 1;
  rep.exhausted = true;
  for (int mi = 0; mi < nm; ++mi) {
    rep.nodes += nodes[mi];
    if (aborted[mi]) rep.exhausted = false;
    if (found[mi] && !rep.feasible) {
      rep.feasible = true;
      rep.witness = path_to_seq(geo, paths[mi]);
    }
  }
  return rep;
}

SearchReport plain_enumeration(int n, int length) {
  if (n < 2 || n > 4 || length < 0 || length > 6)
    throw std::invalid_argument("plain enumeration limited to 2 <= n <= 4 and length <= 6");

  const Geometry geo = make_geometry(n);
  const Mask start = Mask(1) << 1;

  SearchReport rep;
  rep.n = n;
  rep.length = length;
  rep.exhausted = true;

  std::vector<int> path;
  auto rec = [&](auto&& self, Mask g, int depth) -> bool {
    ++rep.nodes;
    if (depth == length) return (g & geo.complete) == geo.complete;
    for (std::size_t mi = 0; mi < geo.moves.size(); ++mi) {
      const Mask h = swap_update(geo, g, geo.moves[mi].first, geo.moves[mi].second);
      path.push_back(static_cast<int>(mi));
      if (self(self, h, depth + 1)) return true;
      path.pop_back();
    }
    return false;
  };
  rep.feasible = rec(rec, start, 0);
  if (rep.feasible) rep.witness = path_to_seq(geo, path);
  return rep;
}

MinimalityReport certify_minimality(int n, const SearchOptions& opts) {
  MinimalityReport rep;
  rep.n = n;
  const TranspositionSeq seq = reach2(n);
  rep.length = seq.length();
  rep.reachable = check_reachability(seq).pass;
  rep.shorter = exhaust_reach2(n, rep.length - 1, opts);
  rep.minimal = rep.reachable && rep.shorter.exhausted && !rep.shorter.feasible;
  return rep;
}

void to_json(nlohmann::json& j, const SearchReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"length", r.length},
                     {"verdict", r.verdict()},
                     {"feasible", r.feasible},
                     {"exhausted", r.exhausted},
                     {"nodes", r.nodes}};
  if (r.witness) j["witness"] = *r.witness;
}

void to_json(nlohmann::json& j, const MinimalityReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"length", r.length},
                     {"reachable", r.reachable},
                     {"shorter", r.shorter},
                     {"minimal", r.minimal}};
}

}  // namespace lts
