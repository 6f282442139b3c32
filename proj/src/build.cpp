#include "lts/build.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lts {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

Network shift_labels(const Network& net, int offset, int m) {
  std::vector<LazySwap> swaps;
  swaps.reserve(net.swaps.size());
  for (const auto& s : net.swaps) swaps.emplace_back(s.a + offset, s.b + offset, s.p);
  return Network(m, std::move(swaps));
}

const ProbScalar kHalf = ProbScalar::rat(1, 2);

}  // namespace

Network placement_chain(int n, int x) {
  if (n < 1 || x < 1 || x > n) throw std::invalid_argument("placement_chain: need 1 <= x <= n");
  std::vector<LazySwap> swaps;
  swaps.reserve(n - 1);
  int at = x;
  int next = n;
  for (int i = 1; i <= n - 1; ++i) {
    if (next == x) --next;  // descending walk through [n] \ {x}
    swaps.emplace_back(at, next, ProbScalar(make_rational(n - i, n - i + 1)));
    at = next--;
  }
  return Network(n, std::move(swaps));
}

Network k_tuple_shuffle(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("k_tuple_shuffle: need 1 <= k <= n");
  Network net = placement_chain(n, n);
  if (k > 1) net = concat(embed(k_tuple_shuffle(n - 1, k - 1), n), net);
  require(net.length() == ktuple_length(n, k), "k_tuple_shuffle: length mismatch");
  return net;
}

Network u2_shuffle(int n) {
  if (n < 2) throw std::invalid_argument("u2_shuffle: need n >= 2");
  // move the designated pair (n-1, n) onto (1, 2), everything else shifts up
  std::vector<int> perm(n);
  perm[n - 2] = 1;
  perm[n - 1] = 2;
  for (int i = 1; i <= n - 2; ++i) perm[i - 1] = i + 2;
  Network net = relabel(k_tuple_shuffle(n, 2), perm);
  require(net.length() == u2_length(n), "u2_shuffle: length mismatch");
  return net;
}

Network pair_placement(int n, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > n || b > n)
    throw std::invalid_argument("pair_placement: need distinct labels in [n]");
  std::vector<int> perm(n);
  perm[0] = a;
  perm[1] = b;
  int fill = 3;
  for (int v = 1; v <= n; ++v)
    if (v != a && v != b) perm[fill++ - 1] = v;
  return relabel(u2_shuffle(n), perm);
}

Network hypercube_strong1(int t) {
  if (t < 0 || t > 30) throw std::invalid_argument("hypercube_strong1: need 0 <= t <= 30");
  const int n = 1 << t;
  std::vector<LazySwap> swaps;
  swaps.reserve(static_cast<size_t>(hypercube_length(t)));
  for (int i = 1; i <= t; ++i) {
    const int step = 1 << (i - 1);
    for (int base = 0; base < n; ++base)
      if (!(base & step)) swaps.emplace_back(base + 1, base + step + 1, kHalf);
  }
  return Network(n, std::move(swaps));
}

Network merge_strong1(const Network& bottom, const Network& top) {
  const int n = bottom.n, r = top.n;
  std::vector<LazySwap> swaps = bottom.swaps;
  for (const auto& s : top.swaps) swaps.emplace_back(s.a + n, s.b + n, s.p);

  // walk two pointers over positions; q and q' track the probability that the
  // current bottom/top position still holds an element of the bottom block,
  // which stays rational no matter what the input probabilities are
  const Rational target = make_rational(n, n + r);
  int j = 1, jp = n + 1;
  Rational q(1), qp(0);
  const size_t balance_start = swaps.size();
  while (!(j == n + 1 && jp == n + r + 1)) {
    require(j <= n && jp <= n + r, "merge_strong1: pointer walked off");
    const Rational sum = q + qp;
    const int c = cmp(sum, 2 * target);
    if (c > 0) {
      swaps.emplace_back(j, jp, ProbScalar(Rational((target - qp) / (q - qp))));
      q = sum - target;
      ++jp;
      qp = 0;
    } else if (c < 0) {
      swaps.emplace_back(j, jp, ProbScalar(Rational((q - target) / (q - qp))));
      qp = sum - target;
      ++j;
      q = 1;
    } else {
      swaps.emplace_back(j, jp, kHalf);
      ++j;
      ++jp;
      q = 1;
      qp = 0;
    }
  }
  require(swaps.size() - balance_start <= static_cast<size_t>(n + r - 1),
          "merge_strong1: balance phase too long");
  return Network(n + r, std::move(swaps));
}

Network strong1(int n) {
  if (n < 1 || n > (1 << 30)) throw std::invalid_argument("strong1: need n >= 1");
  Network acc(1, {});
  bool have = false;
  for (int bit = 0; bit < 31; ++bit) {
    if (!(n & (1 << bit))) continue;
    Network block = hypercube_strong1(bit);
    acc = have ? merge_strong1(acc, block) : std::move(block);
    have = true;
  }
  require(acc.n == n, "strong1: wrong ground set");
  require(acc.length() <= strong1_length_bound(n), "strong1: length above bound");
  return acc;
}

TranspositionSeq reach2(int n) {
  if (n < 2) throw std::invalid_argument("reach2: need n >= 2");
  std::vector<std::pair<int, int>> swaps;
  if (n % 2 == 0) {
    const int m = n / 2 - 1;
    swaps.emplace_back(1, 2);
    for (int i = m; i >= 1; --i) swaps.emplace_back(1, 2 * i + 1);
    for (int i = m; i >= 1; --i) swaps.emplace_back(2, 2 * i + 2);
    for (int i = m; i >= 1; --i) swaps.emplace_back(2 * i + 1, 2 * i + 2);
  } else {
    swaps = reach2(n - 1).swaps;
    swaps.emplace_back(1, n);
    swaps.emplace_back(2, n);
  }
  TranspositionSeq seq(n, std::move(swaps));
  require(seq.length() == reach2_length(n), "reach2: length mismatch");
  return seq;
}

ProbScalar solve_division_q(long m) {
  if (m < 1) throw std::invalid_argument("solve_division_q: need m >= 1");
  auto q = make_surd(make_rational(1, 2), make_rational(-1, 2), make_rational(m - 1, 2 * m - 1));
  ProbScalar out{q};
  auto product = try_mul(out, one_minus(out));
  require(product && product->is_rational() &&
              product->as_rational() == make_rational(m, 4 * (2 * m - 1)),
          "solve_division_q: root does not satisfy the quadratic");
  require(out.in_unit(), "solve_division_q: root outside [0, 1]");
  return out;
}

namespace {

Network nice_division_uncached(int n) {
  if (n == 2) return Network(2, {LazySwap(1, 2, kHalf)});
  if (n % 4 == 0) {
    const int m = n / 2;
    const Network half = nice_division(m);
    Network net = concat(embed(half, n), shift_labels(half, m, n));
    std::vector<LazySwap> extra;
    const ProbScalar q = solve_division_q(m);
    const ProbScalar q1 = one_minus(q);
    for (int i = 1; i <= m; ++i) extra.emplace_back(i, m + i, i <= m / 2 ? q : q1);
    for (int i = 1; i <= m / 2; ++i) extra.emplace_back(i, m / 2 + i, kHalf);
    for (int i = m + 1; i <= m + m / 2; ++i) extra.emplace_back(i, m / 2 + i, kHalf);
    return concat(net, Network(n, std::move(extra)));
  }
  // n = 4k+2: place a fresh pair onto (n-1, n) in reverse, divide the rest,
  // then swap labels n/2 and n-1 so the low half is exactly [n/2]
  const Network pp = reverse_network(pair_placement(n, n - 1, n));
  Network net = concat(pp, embed(nice_division(n - 2), n));
  std::vector<int> perm(n);
  for (int i = 1; i <= n; ++i) perm[i - 1] = i;
  perm[n / 2 - 1] = n - 1;
  perm[n - 2] = n / 2;
  return relabel(net, perm);
}

long nice_division_length(int n) {
  if (n == 2) return 1;
  if (n % 4 == 0) return 2 * nice_division_length(n / 2) + n;
  return nice_division_length(n - 2) + 2L * n - 3;
}

Network strong2_uncached(int n) {
  if (n == 1) return Network(1, {});
  if (n % 2 == 0) {
    const Network half = strong2(n / 2);
    Network net = concat(nice_division(n), embed(half, n));
    return concat(net, shift_labels(half, n / 2, n));
  }
  return concat(embed(strong2(n - 1), n), placement_chain(n, n));
}

// the recursions revisit half-size blocks exponentially often without a cache
class BuilderCache {
 public:
  Network get(int n, Network (*compute)(int)) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    Network net = compute(n);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(n, std::move(net)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<int, Network> cache_;
};

}  // namespace

Network nice_division(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("nice_division: need even n >= 2");
  static BuilderCache cache;
  Network net = cache.get(n, nice_division_uncached);
  require(net.length() == nice_division_length(n), "nice_division: length mismatch");
  require(division_length_ok(n, net.length()), "nice_division: length above bound");
  return net;
}

Network strong2(int n) {
  if (n < 1) throw std::invalid_argument("strong2: need n >= 1");
  static BuilderCache cache;
  Network net = cache.get(n, strong2_uncached);
  if (n >= 2) require(strong2_length_ok(n, net.length()), "strong2: length above bound");
  return net;
}

long ktuple_length(int n, int k) { return static_cast<long>(k) * n - static_cast<long>(k) * (k + 1) / 2; }
long u2_length(int n) { return 2L * n - 3; }
long hypercube_length(int t) { return t == 0 ? 0 : static_cast<long>(t) << (t - 1); }
long reach2_length(int n) { return (3L * n + 1) / 2 - 2; }

namespace {

BigInt pow_big(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

long transversal_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("transversal_lower_bound: need n >= 1");
  const BigInt nn = pow_big(n, n);
  long lo = (static_cast<long>(mpz_sizeinbase(nn.get_mpz_t(), 2)) - 1) / 2;
  while (pow_big(4, lo) < nn) ++lo;
  while (lo > 0 && pow_big(4, lo - 1) >= nn) --lo;
  return lo;
}

long strong1_length_bound(int n) { return transversal_lower_bound(n) + 2L * n; }

bool division_length_ok(int n, long len) {
  return pow_big(2, len) <= pow_big(n, 3L * n);
}

bool strong2_length_ok(int n, long len) {
  if (n < 2) return len == 0;
  // bracket log2(n) by p/q from below and above, refine until decisive
  for (long q = 16; q <= 4096; q *= 2) {
    long p = static_cast<long>(q * std::log2(static_cast<double>(n)));
    while (pow_big(2, p) > pow_big(n, q)) --p;          // now 2^p <= n^q
    while (pow_big(2, p + 1) <= pow_big(n, q)) ++p;     // tight floor
    const BigInt lhs = BigInt(len) * q * q;
    if (lhs <= BigInt(4L * n) * p * p) return true;     // len <= 4n (p/q)^2 <= 4n log2(n)^2
    if (lhs > BigInt(4L * n) * (p + 1) * (p + 1)) return false;
  }
  throw std::logic_error("strong2_length_ok: bracket did not resolve");
}

}  // namespace lts
