#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "lts/checks.hpp"

namespace lts {

struct SearchOptions {
  unsigned long long max_nodes = 0;  // 0: unlimited
  int jobs = 0;                      // 0: library default, 1: serial reference
};

// Outcome of an exhaustive reachability search over transposition sequences of
// length at most `length`. Updates only ever add edges, so allowing shorter
// sequences loses nothing and lets the search skip moves that change nothing.
struct SearchReport {
  int n = 0;
  int length = 0;
  bool feasible = false;
  bool exhausted = false;  // false when the node cap stopped the search
  unsigned long long nodes = 0;
  std::optional<TranspositionSeq> witness;  // completing sequence when feasible

  // "feasible", "infeasible", or "inconclusive"
  std::string verdict() const;
};

// Can any sequence of at most `length` transpositions reach every ordered pair?
// Exhaustive with memoized relabeling symmetry; limited to n <= 7, length <= 9.
SearchReport exhaust_reach2(int n, int length, const SearchOptions& opts = {});

// Unpruned enumeration of sequences of exactly `length` moves, kept as a slow
// reference for the search; limited to n <= 4, length <= 6.
SearchReport plain_enumeration(int n, int length);

// The stock reach sequence passes at its own length while every shorter
// sequence fails, proved by exhaustion.
struct MinimalityReport {
  int n = 0;
  int length = 0;
  bool reachable = false;
  SearchReport shorter;  // search at length - 1
  bool minimal = false;
};

MinimalityReport certify_minimality(int n, const SearchOptions& opts = {});

void to_json(nlohmann::json& j, const SearchReport& r);
void to_json(nlohmann::json& j, const MinimalityReport& r);

}  // namespace lts
