#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lts/build.hpp"
#include "lts/checks.hpp"
#include "lts/propagate.hpp"

using namespace lts;

TEST_CASE("placement_chain shape and probabilities") {
  Network c = placement_chain(3, 3);
  REQUIRE(c.length() == 2);
  CHECK(c.swaps[0] == LazySwap(3, 2, ProbScalar::rat(2, 3)));
  CHECK(c.swaps[1] == LazySwap(2, 1, ProbScalar::rat(1, 2)));
  CHECK(placement_chain(1, 1).length() == 0);
  CHECK_THROWS(placement_chain(3, 4));
  CHECK_THROWS(placement_chain(3, 0));
}

TEST_CASE("placement_chain sends x everywhere uniformly") {
  for (int n = 1; n <= 7; ++n)
    for (int x = 1; x <= n; ++x) {
      RatMatrix m = single_marginal_exact(placement_chain(n, x));
      const Rational target = make_rational(1, n);
      for (int j = 1; j <= n; ++j) CHECK(m.at(x, j) == target);
    }
}

TEST_CASE("k_tuple_shuffle lengths and designated-tuple uniformity") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      Network net = k_tuple_shuffle(n, k);
      CHECK(net.length() == k * n - k * (k + 1) / 2);

      // oracle: aggregate the full distribution over the tuple's image
      FullDist f = full_distribution(net);
      std::map<std::vector<int>, Rational> tuple_law;
      for (long r = 0; r < static_cast<long>(f.p.size()); ++r) {
        auto perm = perm_unrank(n, r);
        std::vector<int> image(perm.end() - k, perm.end());
        tuple_law[image] += f.p[r];
      }
      long tuples = 1;
      for (int i = 0; i < k; ++i) tuples *= n - i;
      CHECK(static_cast<long>(tuple_law.size()) == tuples);
      const Rational target = make_rational(1, tuples);
      for (const auto& [image, mass] : tuple_law) CHECK(mass == target);
    }
}

TEST_CASE("u2_shuffle matches the frozen n=2 network and tracks (1,2)") {
  Network u2 = u2_shuffle(2);
  REQUIRE(u2.length() == 1);
  CHECK(u2.swaps[0] == LazySwap(1, 2, ProbScalar::rat(1, 2)));
  for (int n = 2; n <= 9; ++n) {
    Network net = u2_shuffle(n);
    CHECK(net.length() == 2 * n - 3);
    CHECK(check_pair_uniform(net, 1, 2).pass);
  }
  CHECK_THROWS(u2_shuffle(1));
}

TEST_CASE("pair_placement tracks the requested pair") {
  for (auto [n, a, b] : {std::tuple{4, 2, 3}, {5, 5, 1}, {6, 4, 6}, {3, 3, 2}}) {
    Network net = pair_placement(n, a, b);
    CHECK(net.length() == 2 * n - 3);
    CHECK(check_pair_uniform(net, a, b).pass);
  }
  CHECK_THROWS(pair_placement(4, 2, 2));
}

TEST_CASE("hypercube lengths and exact uniformity") {
  const long expected[] = {0, 1, 4, 12, 32, 80};
  for (int t = 0; t <= 5; ++t) {
    Network net = hypercube_strong1(t);
    CHECK(net.n == (1 << t));
    CHECK(net.length() == expected[t]);
    CHECK(net.length() == hypercube_length(t));
    if (t >= 1) CHECK(check_strong1(net).pass);
  }
}

TEST_CASE("merge_strong1 balances two uniform blocks") {
  Network m21 = merge_strong1(hypercube_strong1(1), hypercube_strong1(0));
  REQUIRE(m21.length() == 3);
  CHECK(m21.swaps[1] == LazySwap(1, 3, ProbScalar::rat(1, 3)));
  CHECK(m21.swaps[2] == LazySwap(2, 3, ProbScalar::rat(1, 2)));
  CHECK(check_strong1(m21).pass);

  Network one = merge_strong1(hypercube_strong1(0), hypercube_strong1(0));
  REQUIRE(one.length() == 1);
  CHECK(one.swaps[0] == LazySwap(1, 2, ProbScalar::rat(1, 2)));

  for (auto [ta, tb] : {std::pair{2, 1}, {1, 2}, {2, 2}, {0, 3}}) {
    Network merged = merge_strong1(hypercube_strong1(ta), hypercube_strong1(tb));
    CHECK(check_strong1(merged).pass);
  }
}

TEST_CASE("strong1 is exactly uniform with bounded length") {
  for (int n = 1; n <= 24; ++n) {
    Network net = strong1(n);
    CHECK(net.n == n);
    CHECK(net.length() <= strong1_length_bound(n));
    if (n >= 2) CHECK(check_strong1(net, {1e-9, 128, 1}).pass);
  }
  // powers of two reduce to the plain hypercube
  CHECK(strong1(8) == hypercube_strong1(3));
}

TEST_CASE("length bound helpers") {
  CHECK(transversal_lower_bound(2) == 1);
  CHECK(transversal_lower_bound(8) == 12);
  CHECK(transversal_lower_bound(64) == 192);
  CHECK(strong1_length_bound(8) == 28);
  CHECK(division_length_ok(4, 6));
  CHECK(!division_length_ok(4, 1000));
  CHECK(strong2_length_ok(64, 1152));
  CHECK(!strong2_length_ok(64, 9217));
  CHECK(strong2_length_ok(64, 9216));
}

TEST_CASE("reach2 reaches everything at the pinned length") {
  for (int n = 2; n <= 14; ++n) {
    TranspositionSeq seq = reach2(n);
    CHECK(seq.length() == (3 * n + 1) / 2 - 2);
    CHECK(check_reachability(seq).pass);
  }
  CHECK(reach2(2).swaps == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS(reach2(1));
}

TEST_CASE("solve_division_q") {
  // m = 2: q = 1/2 - sqrt(3)/6
  ProbScalar q2 = solve_division_q(2);
  REQUIRE(!q2.is_rational());
  CHECK(q2.as_surd() == Surd{make_rational(1, 2), make_rational(-1, 6), BigInt(3)});
  // m = 1 degenerates to the rational root 1/2
  ProbScalar q1 = solve_division_q(1);
  REQUIRE(q1.is_rational());
  CHECK(q1.as_rational() == make_rational(1, 2));
  for (long m = 2; m <= 64; ++m) {
    ProbScalar q = solve_division_q(m);
    Interval iv = eval_interval(q, 128);
    CHECK(iv.hi < 0.5);
    CHECK(iv.lo > 0.0);
  }
}

TEST_CASE("nice_division lengths follow the recursion") {
  const std::pair<int, long> frozen[] = {{2, 1},  {4, 6},   {6, 15},  {8, 20},
                                         {10, 37}, {12, 42}, {16, 56}, {32, 144},
                                         {64, 352}};
  for (auto [n, len] : frozen) CHECK(nice_division(n).length() == len);
  CHECK_THROWS(nice_division(3));
  CHECK_THROWS(nice_division(0));
}

TEST_CASE("nice_division divides and keeps uniform marginals") {
  CHECK(check_division(nice_division(2)).pass);
  for (int n : {4, 6, 8, 10, 12}) {
    Network net = nice_division(n);
    Verdict division = check_division(net, {1e-9, 128, 1});
    CHECK(division.pass);
    CHECK(division.max_interval_width < 1e-12);
    Verdict uniform = check_strong1(net, {1e-9, 128, 1});
    CHECK(uniform.pass);
  }
}

TEST_CASE("strong2 lengths match the frozen table") {
  const std::pair<int, long> frozen[] = {{1, 0},   {2, 1},   {4, 8},    {8, 36},
                                         {16, 128}, {32, 400}, {64, 1152}};
  for (auto [n, len] : frozen) CHECK(strong2(n).length() == len);
}

TEST_CASE("strong2 is pair uniform for every start pair") {
  CHECK(check_strong2(strong2(1)).pass);
  CHECK(check_strong2(strong2(2)).pass);
  // n = 3 stays rational: division(2) + chain; exact all the way
  Network s3 = strong2(3);
  CHECK(s3.is_rational());
  Verdict v3 = check_strong2(s3);
  CHECK(v3.mode == "exact");
  CHECK(v3.pass);
  for (int n : {4, 5, 6, 7, 8, 9}) {
    Verdict v = check_strong2(strong2(n), {1e-9, 128, 1});
    CHECK(v.pass);
  }
}

TEST_CASE("full-distribution oracle confirms strong2 pair law end to end") {
  // not just the checker: recompute the pair law for every start pair from the
  // full distribution over S_n
  for (int n : {3, 4, 5}) {
    Network net = strong2(n);
    if (!net.is_rational()) continue;
    FullDist f = full_distribution(net);
    const Rational target = make_rational(1, static_cast<long>(n) * (n - 1));
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        if (x == y) continue;
        std::map<std::pair<int, int>, Rational> law;
        for (long r = 0; r < static_cast<long>(f.p.size()); ++r) {
          auto perm = perm_unrank(n, r);
          law[{perm[x - 1], perm[y - 1]}] += f.p[r];
        }
        for (const auto& [img, mass] : law) CHECK(mass == target);
      }
  }
}
