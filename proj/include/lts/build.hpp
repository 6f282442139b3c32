#pragma once

#include "lts/network.hpp"

namespace lts {

// moves the element at position x along a descending chain so it ends uniformly
// on [n]; length n-1
Network placement_chain(int n, int x);

// sends the designated tuple (n-k+1, ..., n) to a uniform ordered k-tuple;
// length kn - k(k+1)/2
Network k_tuple_shuffle(int n, int k);

// uniform ordered pair for the start pair (1, 2); length 2n-3
Network u2_shuffle(int n);

// same, for an arbitrary start pair (a, b)
Network pair_placement(int n, int a, int b);

// fully uniform single-element marginals on 2^t labels, all probabilities 1/2;
// length t*2^(t-1)
Network hypercube_strong1(int t);

// combines networks with uniform marginals on [n] and [r] into one on [n+r];
// adds at most n+r-1 balancing swaps
Network merge_strong1(const Network& bottom, const Network& top);

// uniform single-element marginals for any n: hypercube blocks per binary digit,
// merged smallest block first
Network strong1(int n);

// the tracked pair starting at (1, 2) reaches every ordered pair;
// length ceil(3n/2) - 2
TranspositionSeq reach2(int n);

// every start pair crosses the halves of [n] with the divided profile
Network nice_division(int n);

// every ordered start pair lands uniformly; division followed by half-size
// copies, with a placement chain appended for odd n
Network strong2(int n);

// exact root of q(1-q) = m/(4(2m-1)) below 1/2
ProbScalar solve_division_q(long m);

long ktuple_length(int n, int k);
long u2_length(int n);         // 2n-3
long hypercube_length(int t);  // t*2^(t-1)
long reach2_length(int n);     // ceil(3n/2)-2

// smallest integer L with 4^L >= n^n, i.e. ceil(n log2(n) / 2)
long transversal_lower_bound(int n);
// transversal_lower_bound(n) + 2n, i.e. ceil(n log2(n) / 2 + 2n)
long strong1_length_bound(int n);
// len <= 3 n log2(n), decided exactly via 2^len vs n^(3n)
bool division_length_ok(int n, long len);
// len <= 4 n (log2 n)^2, decided exactly via rational log2 brackets
bool strong2_length_ok(int n, long len);

}  // namespace lts
