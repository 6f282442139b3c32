#include "lts/reach.hpp"

#include <bit>
#include <stdexcept>

namespace lts {

ReachDigraph::ReachDigraph(int n) : n_(n), wpr_((n + 63) / 64), bits_(static_cast<size_t>(n) * wpr_, 0) {
  if (n < 2) throw std::invalid_argument("reach digraph: need at least two labels");
}

ReachDigraph ReachDigraph::initial(int n) {
  ReachDigraph g(n);
  g.add_edge(1, 2);
  return g;
}

bool ReachDigraph::edge(int i, int j) const {
  const int col = j - 1;
  return (bits_[static_cast<size_t>(i - 1) * wpr_ + col / 64] >> (col % 64)) & 1u;
}

void ReachDigraph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("reach digraph: no loops");
  const int col = j - 1;
  bits_[static_cast<size_t>(i - 1) * wpr_ + col / 64] |= std::uint64_t(1) << (col % 64);
}

long ReachDigraph::edge_count() const {
  long total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total;
}

bool ReachDigraph::complete() const {
  return edge_count() == static_cast<long>(n_) * (n_ - 1);
}

void ReachDigraph::apply_swap(int a, int b) {
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_)
    throw std::invalid_argument("reach digraph: bad swap");
  const size_t ra = static_cast<size_t>(a - 1) * wpr_;
  const size_t rb = static_cast<size_t>(b - 1) * wpr_;
  const bool had_pair = edge(a, b) || edge(b, a);

  // rows a and b both become the union of the old two rows; the pair columns
  // and the diagonal are fixed up afterwards from the snapshot
  for (int w = 0; w < wpr_; ++w) {
    const std::uint64_t u = bits_[ra + w] | bits_[rb + w];
    bits_[ra + w] = u;
    bits_[rb + w] = u;
  }
  auto clear_bit = [&](size_t row, int j) {
    bits_[row + (j - 1) / 64] &= ~(std::uint64_t(1) << ((j - 1) % 64));
  };
  clear_bit(ra, a);
  clear_bit(ra, b);
  clear_bit(rb, a);
  clear_bit(rb, b);
  if (had_pair) {
    add_edge(a, b);
    add_edge(b, a);
  }

  // other rows: columns a and b each become the union of the old two columns
  for (int i = 1; i <= n_; ++i) {
    if (i == a || i == b) continue;
    if (edge(i, a) || edge(i, b)) {
      add_edge(i, a);
      add_edge(i, b);
    }
  }
}

ReachDigraph reach_digraph(const TranspositionSeq& seq) {
  ReachDigraph g = ReachDigraph::initial(seq.n);
  for (const auto& [a, b] : seq.swaps) g.apply_swap(a, b);
  return g;
}

}  // namespace lts
