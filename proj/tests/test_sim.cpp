#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <set>

#include "betashift/dimension.hpp"
#include "betashift/sim.hpp"
#include "oracles.hpp"

using namespace betashift;

TEST_SUITE("stream rng") {
  TEST_CASE("reproducible and splittable") {
    StreamRng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int i = 0; i < 64; ++i) {
      va.push_back(a.next_u64());
      vb.push_back(b.next_u64());
      vc.push_back(c.next_u64());
      vd.push_back(d.next_u64());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
  }

  TEST_CASE("uniform doubles land in [0,1) with a sane mean") {
    StreamRng r(1, 0);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const double u = r.next_unit();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
      sum += u;
    }
    CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
  }
}

TEST_SUITE("walk sampling") {
  TEST_CASE("identical keys give identical streams") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    CHECK(walk_sample(b, 0.5, 512, 7, 3) == walk_sample(b, 0.5, 512, 7, 3));
    CHECK(walk_sample(b, 0.5, 512, 7, 3) != walk_sample(b, 0.5, 512, 7, 4));
  }

  TEST_CASE("samples are always admissible") {
    for (const char* tail : {"1 1", "101", "111"}) {
      const BetaSpec b = BetaSpec::from_expansion(tail);
      for (std::uint64_t t = 0; t < 8; ++t) {
        const std::vector<std::uint8_t> digits = walk_sample(b, 0.4, 4000, 11, t);
        CHECK_NOTHROW(Word(b, digits));
      }
    }
  }

  TEST_CASE("golden samples avoid 11, the 101 family avoids 11 and 101") {
    const std::vector<std::uint8_t> g = walk_sample(BetaSpec::family_10m1(0), 0.5, 100000, 5, 0);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(!(g[i] == 1 && g[i + 1] == 1));
    const std::vector<std::uint8_t> m1 = walk_sample(BetaSpec::family_10m1(1), 0.5, 100000, 5, 0);
    for (std::size_t i = 0; i + 2 < m1.size(); ++i) {
      CHECK(!(m1[i] == 1 && m1[i + 1] == 1));
      CHECK(!(m1[i] == 1 && m1[i + 1] == 0 && m1[i + 2] == 1));
    }
  }

  TEST_CASE("prefix cylinders distribute as mu_p") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    CHECK(walk_prefix_worst_z(b, 0.5, 3, 20000, 31) <= 4.0);
    CHECK(walk_prefix_worst_z(BetaSpec::family_10m1(1), 0.35, 4, 20000, 33) <= 4.0);
  }
}

TEST_SUITE("markov sampling") {
  TEST_CASE("stationary zero frequency matches the chain") {
    const MarkovMeasure<double> mm = markov_from_mu(BetaSpec::family_10m1(0), 2.0 / 3.0);
    const FreqReport rep = frequency_simulation(mm, 100000, 16, 17);
    CHECK(rep.predicted == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(rep.sigmas <= 4.0);
  }

  TEST_CASE("parallel and serial kernels agree bit for bit") {
    const MarkovMeasure<double> mm = markov_from_mu(BetaSpec::family_10m1(1), 0.55);
    const FreqReport par = frequency_simulation(mm, 20000, 12, 23);
    const FreqReport ser = frequency_simulation_serial(mm, 20000, 12, 23);
    CHECK(par.mean == ser.mean);
    CHECK(par.stderr_ == ser.stderr_);
    const BetaSpec b = BetaSpec::family_10m1(0);
    const std::vector<std::uint8_t> target{0};
    const McCesaro mp = mc_cesaro(b, 0.5, target, 4000, 16, 29);
    const McCesaro ms = mc_cesaro_serial(b, 0.5, target, 4000, 16, 29);
    CHECK(mp.value == ms.value);
    CHECK(mp.half_width == ms.half_width);
  }

  TEST_CASE("results are invariant across thread counts") {
#ifdef _OPENMP
    const MarkovMeasure<double> mm = markov_from_mu(BetaSpec::family_10m1(0), 2.0 / 3.0);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const FreqReport one = frequency_simulation(mm, 50000, 8, 77);
    omp_set_num_threads(saved > 1 ? saved : 2);
    const FreqReport many = frequency_simulation(mm, 50000, 8, 77);
    omp_set_num_threads(saved);
    CHECK(one.mean == many.mean);
    CHECK(one.stderr_ == many.stderr_);
#endif
  }

  TEST_CASE("markov samples stay on the subshift") {
    const BetaSpec b = BetaSpec::family_10m1(1);
    const MarkovMeasure<double> mm = markov_from_mu(b, 0.5);
    const std::vector<std::uint8_t> digits = markov_sample(mm, 5000, 3, 1);
    CHECK_NOTHROW(Word(b, digits));
  }

  TEST_CASE("a deterministic all-zero chain has frequency exactly one") {
    MarkovMeasure<double> mm;
    mm.order = 1;
    mm.states = {"0"};
    mm.pi = {1.0};
    mm.trans = {{1.0}};
    const FreqReport rep = frequency_simulation(mm, 10000, 4, 1);
    CHECK(rep.mean == 1.0);
    CHECK(rep.predicted == 1.0);
  }

  TEST_CASE("the 101-family chain tuned for frequency 0.8") {
    const BetaSpec b = BetaSpec::family_10m1(1);
    const double q = q_of_p(0.8, 1);
    CHECK(q == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    const MarkovMeasure<double> mm = markov_from_mu(b, q);
    const FreqReport rep = frequency_simulation(mm, 200000, 16, 21);
    CHECK(rep.predicted == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rep.sigmas <= 4.0);
  }

  TEST_CASE("frequency report flags an off-prediction chain") {
    // sanity on the sigma computation: compare against a wrong prediction
    const MarkovMeasure<double> mm = markov_from_mu(BetaSpec::family_10m1(0), 0.5);
    FreqReport rep = frequency_simulation(mm, 50000, 16, 19);
    const double z_true = rep.sigmas;
    CHECK(z_true <= 4.0);
    const double z_wrong = std::abs(rep.mean - 0.9) / rep.stderr_;
    CHECK(z_wrong > 10.0);
  }
}

TEST_SUITE("monte-carlo cesaro") {
  TEST_CASE("agrees with the exact recursion") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    const Word zero(b, "0");
    const double exact = cesaro_mp(b, zero, 4000, 0.5).value;
    const McCesaro mc = mc_cesaro(b, 0.5, zero.digits(), 4000, 64, 101);
    CHECK(std::abs(mc.value - exact) < mc.half_width + 2e-3);
  }

  TEST_CASE("longer targets") {
    const BetaSpec b = BetaSpec::family_10m1(1);
    const Word target(b, "100");
    const double exact = cesaro_mp(b, target, 2000, 0.4).value;
    const McCesaro mc = mc_cesaro(b, 0.4, target.digits(), 2000, 64, 55);
    CHECK(std::abs(mc.value - exact) < mc.half_width + 3e-3);
  }
}
