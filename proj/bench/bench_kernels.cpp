// Timing comparison of the OpenMP kernels against their serial references.
// Usage: bench_kernels [streams] [length]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "betashift/measure.hpp"
#include "betashift/sim.hpp"
#include "betashift/words.hpp"

using namespace betashift;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0);
}

bool naive_admissible(const BetaSpec& b, std::uint32_t mask, int n) {
  for (int k = 0; k < n; ++k) {
    for (int j = 1; j + k <= n; ++j) {
      const int wd = (mask >> (n - (k + j))) & 1u;
      const int ed = b.eps_star(static_cast<std::size_t>(j));
      if (wd < ed) break;
      if (wd > ed) return false;
    }
  }
  return true;
}

std::uint64_t brute_count_serial(const BetaSpec& b, int n) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (naive_admissible(b, mask, n)) ++count;
  }
  return count;
}

std::uint64_t brute_count_omp(const BetaSpec& b, int n) {
  std::uint64_t count = 0;
  const std::uint32_t top = 1u << n;
#pragma omp parallel for schedule(static, 4096) reduction(+ : count)
  for (std::uint32_t mask = 0; mask < top; ++mask) {
    if (naive_admissible(b, mask, n)) ++count;
  }
  return count;
}

}  // namespace

int main(int argc, char** argv) {
  const long streams = argc > 1 ? std::atol(argv[1]) : 32;
  const long length = argc > 2 ? std::atol(argv[2]) : 1000000;
  const std::uint64_t seed = 12345;

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "omp[s]", "speedup");

  const BetaSpec golden = BetaSpec::family_10m1(0);
  const MarkovMeasure<double> mm = markov_from_mu(golden, 2.0 / 3.0);

  {
    FreqReport a, b;
    const double ts = timed([&] { a = frequency_simulation_serial(mm, length, streams, seed); });
    const double tp = timed([&] { b = frequency_simulation(mm, length, streams, seed); });
    std::printf("%-34s %10.3f %10.3f %7.1fx  %s\n", "markov frequency ensemble", ts, tp, ts / tp,
                a.mean == b.mean ? "identical" : "MISMATCH");
  }

  {
    const std::vector<std::uint8_t> target{0};
    McCesaro a, b;
    const double ts =
        timed([&] { a = mc_cesaro_serial(golden, 0.5, target, length / 10, streams, seed); });
    const double tp = timed([&] { b = mc_cesaro(golden, 0.5, target, length / 10, streams, seed); });
    std::printf("%-34s %10.3f %10.3f %7.1fx  %s\n", "monte-carlo cesaro ensemble", ts, tp, ts / tp,
                a.value == b.value ? "identical" : "MISMATCH");
  }

  {
    const int n = 24;
    std::uint64_t a = 0, b = 0;
    const double ts = timed([&] { a = brute_count_serial(golden, n); });
    const double tp = timed([&] { b = brute_count_omp(golden, n); });
    const std::uint64_t dp = count_admissible(golden, n)[static_cast<std::size_t>(n - 1)];
    std::printf("%-34s %10.3f %10.3f %7.1fx  %s\n", "brute-force admissibility (n=24)", ts, tp,
                ts / tp, (a == b && a == dp) ? "identical" : "MISMATCH");
    std::printf("%-34s %10s %10.6f    --    (same count: %llu)\n",
                "  follower-state count (reference)", "", timed([&] { count_admissible(golden, n); }),
                static_cast<unsigned long long>(dp));
  }

  {
    // exhaustive pair scan inside the quasi-Bernoulli report (omp inside)
    QuasiBernoulliReport<double> rep;
    const double tp = timed([&] { rep = quasi_bernoulli_report(golden, 12, 0.5); });
    std::printf("%-34s %10s %10.3f    --    (%ld pairs)\n", "quasi-bernoulli pair scan (len 12)",
                "", tp, rep.pairs);
  }

  return 0;
}
