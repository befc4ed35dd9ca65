#include <doctest.h>

#include <cmath>

#include "betashift/dimension.hpp"
#include "betashift/markov.hpp"
#include "betashift/sim.hpp"
#include "oracles.hpp"

using namespace betashift;

namespace {

double xlx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

}  // namespace

TEST_SUITE("level-set dimension") {
  TEST_CASE("below the attainable frequency the sets are empty") {
    CHECK(dim_level_set(0.5, 0).dim == 0.0);
    CHECK(dim_level_set(0.3, 1).dim == 0.0);
  }

  TEST_CASE("endpoints are exactly zero") {
    for (int m = 0; m <= 3; ++m) {
      CHECK(dim_level_set(double(m + 1) / double(m + 2), m).dim == 0.0);
      CHECK(dim_level_set(1.0, m).dim == 0.0);
    }
  }

  TEST_CASE("golden spot value at p = 3/4") {
    const DimReport rep = dim_level_set(0.75, 0);
    CHECK(rep.q == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(rep.dim == doctest::Approx(0.99205).epsilon(1e-4));
    CHECK(rep.entropy == doctest::Approx(0.477386).epsilon(1e-5));
  }

  TEST_CASE("matches the golden-base closed form on a grid") {
    const double logb = BetaSpec::family_10m1(0).log_beta();
    for (int i = 1; i < 50; ++i) {
      const double p = 0.5 + 0.5 * i / 50.0;
      const double direct = (xlx(p) - xlx(2 * p - 1) - xlx(1 - p)) / logb;
      CHECK(dim_level_set(p, 0).dim == doctest::Approx(direct).epsilon(1e-12));
    }
  }

  TEST_CASE("entropy field is dim times log beta") {
    for (int m = 0; m <= 2; ++m) {
      const double logb = BetaSpec::family_10m1(m).log_beta();
      const double lo = double(m + 1) / double(m + 2);
      for (int i = 1; i < 10; ++i) {
        const DimReport rep = dim_level_set(lo + (1 - lo) * i / 10.0, m);
        CHECK(rep.entropy == doctest::Approx(rep.dim * logb).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("variational identity against the synthesized chain") {
    for (int m = 0; m <= 2; ++m) {
      const BetaSpec fam = BetaSpec::family_10m1(m);
      const double lo = double(m + 1) / double(m + 2);
      for (int i = 1; i < 25; ++i) {
        const double p = lo + (1 - lo) * i / 25.0;
        const DimReport rep = dim_level_set(p, m);
        const double h = markov_entropy(markov_from_mu(fam, rep.q));
        CAPTURE(m);
        CAPTURE(p);
        CHECK(std::abs(h - rep.dim * fam.log_beta()) < 1e-10);
      }
    }
  }
}

TEST_SUITE("bounds") {
  TEST_CASE("binary-entropy bound, raw with the overflow note") {
    const double beta = BetaSpec::family_10m1(0).value_d();
    const UpperBound ub = dim_upper_bound(0.5, beta);
    CHECK(ub.value == doctest::Approx(std::log(2.0) / std::log(beta)).epsilon(1e-14));
    CHECK(ub.value == doctest::Approx(1.4404).epsilon(1e-4));
    CHECK(ub.exceeds_one);
    CHECK(dim_upper_bound(0.0, beta).value == 0.0);
    CHECK(dim_upper_bound(1.0, beta).value == 0.0);
  }

  TEST_CASE("bound dominates the exact dimension") {
    for (int m = 0; m <= 2; ++m) {
      const double beta = BetaSpec::family_10m1(m).value_d();
      const double lo = double(m + 1) / double(m + 2);
      for (int i = 0; i <= 20; ++i) {
        const double p = lo + (1 - lo) * i / 20.0;
        CHECK(dim_level_set(p, m).dim <= dim_upper_bound(p, beta).value + 1e-12);
      }
    }
  }

  TEST_CASE("one-sided tail bounds") {
    const double beta = BetaSpec::family_10m1(0).value_d();
    const auto [lo_half, hi_half] = dim_tail_bounds(0.5, beta);
    const double lb = std::log(beta);
    CHECK(lo_half == doctest::Approx((-0.5 * std::log(0.5) - std::log(0.5)) / lb).epsilon(1e-14));
    CHECK(hi_half == doctest::Approx((-std::log(0.5) - 0.5 * std::log(0.5)) / lb).epsilon(1e-14));
    CHECK(dim_tail_bounds(1e-9, beta).first < 1e-6);
    CHECK(dim_tail_bounds(1.0 - 1e-9, beta).second < 1e-6);
    CHECK_THROWS_AS(dim_tail_bounds(0.0, beta), DomainError);
    CHECK_THROWS_AS(dim_tail_bounds(1.0, beta), DomainError);
  }
}

TEST_SUITE("local dimension") {
  TEST_CASE("the point 1/beta on the golden base") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    // digits of 1/beta: 1 0 0 0 ...
    std::vector<std::uint8_t> stream(2000, 0);
    stream[0] = 1;
    const double p = 0.3;
    const double limit = -std::log(p) / b.log_beta();
    const std::vector<double> traj = local_dim_estimate(b, stream, p, {10, 100, 2000});
    CHECK(std::abs(traj[2] - limit) < 1e-2);
    CHECK(std::abs(traj[2] - limit) < std::abs(traj[0] - limit));
    // exact finite-n value: mu = (1-p) p^{n-2}, |I_n| = beta^{-n}
    const double n = 2000;
    const double expect = (std::log(1 - p) + (n - 2) * std::log(p)) / (-n * b.log_beta());
    CHECK(traj[2] == doctest::Approx(expect).epsilon(1e-12));
  }

  TEST_CASE("the all-zero stream") {
    const BetaSpec b = BetaSpec::family_10m1(1);
    std::vector<std::uint8_t> stream(1000, 0);
    const double p = 0.6;
    const double ratio = local_dim_estimate(b, stream, p, {1000})[0];
    CHECK(ratio == doctest::Approx(-std::log(p) / b.log_beta()).epsilon(1e-12));
  }

  TEST_CASE("markov-typical streams approach the level-set dimension") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    const MarkovMeasure<double> mm = markov_from_mu(b, 2.0 / 3.0);
    const std::vector<std::uint8_t> stream = markov_sample(mm, 200000, 99, 0);
    const double ratio = local_dim_estimate(b, stream, 2.0 / 3.0, {200000})[0];
    CHECK(std::abs(ratio - dim_level_set(0.75, 0).dim) < 1e-2);
  }

  TEST_CASE("inadmissible streams are rejected") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    const std::vector<std::uint8_t> bad{1, 1, 0};
    CHECK_THROWS_AS(local_dim_estimate(b, bad, 0.5, {3}), DomainError);
  }
}

TEST_SUITE("entropy gap") {
  TEST_CASE("worked values at p = 1/2") {
    const EntropyGap g = entropy_gap_counter(0.5);
    CHECK(g.a == doctest::Approx(4.0 / 7.0).epsilon(1e-15));
    CHECK(g.b == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
    CHECK(g.x_star == doctest::Approx((5.0 + std::sqrt(61.0)) / 42.0).epsilon(1e-14));
    CHECK(g.x_star == doctest::Approx(0.30500).epsilon(1e-4));
    CHECK(g.gap > 0.0);
    CHECK(g.f_max >= g.h_upper);
  }

  TEST_CASE("a stays above 1/3 and b stays inside its bracket") {
    for (int i = 1; i <= 99; ++i) {
      const double p = i / 100.0;
      const EntropyGap g = entropy_gap_counter(p);
      CHECK(g.a >= 1.0 / 3.0 - 1e-14);
      CHECK(g.b >= (1.0 - g.a) / 2.0 - 1e-12);
      CHECK(g.b <= std::min(g.a, 1.0 - g.a) + 1e-12);
      CHECK(g.gap > 0.0);
      CHECK(std::abs(g.b - g.x_star) > 1e-9);
    }
  }

  TEST_CASE("closed-form maximizer agrees with golden-section search") {
    for (int i = 1; i <= 19; ++i) {
      const double p = i / 20.0;
      const EntropyGap g = entropy_gap_counter(p);
      const double argmax = oracles::golden_section_max(
          [&](double x) { return entropy_gap_objective(g.a, x); }, (1.0 - g.a) / 2.0,
          std::min(g.a, 1.0 - g.a));
      CHECK(std::abs(argmax - g.x_star) < 1e-8);
      CHECK(entropy_gap_objective(g.a, argmax) <= g.f_max + 1e-12);
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(entropy_gap_counter(0.0), DomainError);
    CHECK_THROWS_AS(entropy_gap_counter(1.0), DomainError);
  }
}
