#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lts/prob_scalar.hpp"

namespace lts {

// One lazy transposition: swap positions a and b with probability p, do nothing
// otherwise. The pair is unordered; canonical storage keeps a < b.
struct LazySwap {
  int a;
  int b;
  ProbScalar p;

  LazySwap(int a_, int b_, ProbScalar p_);
  bool operator==(const LazySwap& o) const { return a == o.a && b == o.b && p == o.p; }
};

// Swaps are stored in execution order: swaps[0] acts on the ground set first.
// Listings that compose right-to-left (product notation where the rightmost
// factor hits the input first) must be reversed before they are stored here.
struct Network {
  int n = 1;
  std::vector<LazySwap> swaps;

  Network() = default;
  Network(int n_, std::vector<LazySwap> swaps_);

  int length() const { return static_cast<int>(swaps.size()); }
  bool is_rational() const;
  bool operator==(const Network& o) const { return n == o.n && swaps == o.swaps; }
};

// deterministic transpositions only, for reachability work; same execution-order
// convention as Network
struct TranspositionSeq {
  int n = 1;
  std::vector<std::pair<int, int>> swaps;

  TranspositionSeq() = default;
  TranspositionSeq(int n_, std::vector<std::pair<int, int>> swaps_);

  int length() const { return static_cast<int>(swaps.size()); }
  bool operator==(const TranspositionSeq& o) const = default;
};

Network reverse_network(const Network& net);
// perm maps old label i to perm[i-1]; must be a bijection on [n]
Network relabel(const Network& net, const std::vector<int>& perm);
// x acts first, then y; ground sets must already match
Network concat(const Network& x, const Network& y);
// same swaps over the larger ground set [m], m >= n
Network embed(const Network& net, int m);

std::string encode(const Network& net);
Network decode_network(const std::string& bytes);
std::string encode(const TranspositionSeq& seq);
TranspositionSeq decode_seq(const std::string& bytes);

void to_json(nlohmann::json& j, const Network& net);
void from_json(const nlohmann::json& j, Network& net);
void to_json(nlohmann::json& j, const TranspositionSeq& seq);
void from_json(const nlohmann::json& j, TranspositionSeq& seq);

}  // namespace lts
