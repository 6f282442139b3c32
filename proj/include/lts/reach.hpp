#pragma once

#include <cstdint>
#include <vector>

#include "lts/network.hpp"

namespace lts {

// Ordered-pair reachability digraph: edge (i, j) present when the tracked pair
// starting at positions (1, 2) can land on (i, j) with positive probability.
// Loops never occur. Rows are bitsets, packed 64 labels per word.
class ReachDigraph {
 public:
  explicit ReachDigraph(int n);
  static ReachDigraph initial(int n);  // single edge (1, 2)

  int n() const { return n_; }
  bool edge(int i, int j) const;
  void add_edge(int i, int j);
  long edge_count() const;
  bool complete() const;  // all n(n-1) ordered pairs

  // one lazy transposition at (a, b); reads the pre-step snapshot throughout
  void apply_swap(int a, int b);

  bool operator==(const ReachDigraph& o) const = default;

 private:
  int n_;
  int wpr_;  // words per row
  std::vector<std::uint64_t> bits_;
};

ReachDigraph reach_digraph(const TranspositionSeq& seq);

}  // namespace lts
