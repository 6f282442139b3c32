#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "lts/build.hpp"
#include "lts/checks.hpp"
#include "lts/propagate.hpp"
#include "lts/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

template <class Fn>
double best_of(int reps, Fn fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clk::now();
    fn();
    const double dt = seconds_since(t0);
    if (dt < best) best = dt;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  int n = 32;
  int reps = 3;
  int jobs = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--n") == 0 && i + 1 < argc) {
      n = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
      reps = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--n N] [--reps R] [--jobs J]\n", argv[0]);
      return 1;
    }
  }

#ifdef _OPENMP
  const int width = jobs > 0 ? jobs : omp_get_max_threads();
#else
  const int width = 1;
  std::printf("built without OpenMP; parallel timings run the serial path\n");
#endif
  std::printf("n = %d, reps = %d (best-of), parallel width = %d\n\n", n, reps, width);

  const lts::Network s1 = lts::strong1(n);
  const lts::Network s2 = lts::strong2(n);
  std::printf("strong1 length %d, strong2 length %d\n\n", s1.length(), s2.length());

  {
    const double ser = best_of(reps, [&] {
      lts::single_marginal_interval(s2, {.precision_bits = 128, .jobs = 1});
    });
    const double par = best_of(reps, [&] {
      lts::single_marginal_interval(s2, {.precision_bits = 128, .jobs = jobs});
    });
    report("single marginal (strong2)", ser, par);
  }

  {
    const double ser = best_of(reps, [&] {
      if (!lts::check_strong2(s2, {.tol = 1e-9, .precision_bits = 128, .jobs = 1}).pass)
        std::abort();
    });
    const double par = best_of(reps, [&] {
      if (!lts::check_strong2(s2, {.tol = 1e-9, .precision_bits = 128, .jobs = jobs}).pass)
        std::abort();
    });
    report("all-pairs check (strong2)", ser, par);
  }

  {
    const int sn = 6;
    const int budget = lts::reach2(sn).length() - 1;
    const double ser = best_of(reps, [&] {
      if (lts::exhaust_reach2(sn, budget, {.max_nodes = 0, .jobs = 1}).feasible) std::abort();
    });
    const double par = best_of(reps, [&] {
      if (lts::exhaust_reach2(sn, budget, {.max_nodes = 0, .jobs = jobs}).feasible) std::abort();
    });
    report("exhaustive search (n=6)", ser, par);
  }

  return 0;
}
