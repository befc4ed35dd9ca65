#include <doctest.h>

#include "betashift/measure.hpp"
#include "oracles.hpp"

using namespace betashift;

TEST_SUITE("mu_cylinder") {
  TEST_CASE("single cylinders") {
    const BetaSpec b = BetaSpec::from_expansion("1 1");
    for (const Rational& p : {Rational(1, 3), Rational(1, 2), Rational(2, 5)}) {
      CHECK(mu_cylinder(Word(b, "0"), p) == p);
      CHECK(mu_cylinder(Word(b, "1"), p) == Rational(1) - p);
    }
  }

  TEST_CASE("forced zeros carry no factor") {
    const BetaSpec b = BetaSpec::from_expansion("1 1");
    const Rational p(1, 3);
    CHECK(mu_cylinder(Word(b, "10"), p) == Rational(1) - p);  // [10] = [1]
    CHECK(mu_cylinder(Word(b, "00"), p) == Rational(1, 9));
  }

  TEST_CASE("agrees with the definitional counters on every word") {
    const Rational p(2, 7);
    for (const char* tail : {"1 1", "101", "111"}) {
      const BetaSpec b = BetaSpec::from_expansion(tail);
      for (int n = 1; n <= 8; ++n) {
        for (const std::string& w : oracles::enumerate(b, n)) {
          CAPTURE(tail);
          CAPTURE(w);
          REQUIRE(mu_cylinder(Word(b, w), p) == oracles::mu(b, w, p));
        }
      }
    }
  }

  TEST_CASE("consistency and total mass, exact") {
    const Rational p(2, 5), q(3, 5);
    for (const char* tail : {"1 1", "101"}) {
      const BetaSpec b = BetaSpec::from_expansion(tail);
      for (int n = 1; n <= 8; ++n) {
        Rational total(0);
        for (const std::string& w : enumerate_admissible(b, n, false)) {
          const Rational mu = mu_cylinder(Word(b, w), p);
          total += mu;
          Rational children = mu_cylinder(Word(b, w + "0"), p);
          if (is_admissible(b, w + "1")) children += mu_cylinder(Word(b, w + "1"), p);
          REQUIRE(children == mu);
        }
        CHECK(total == Rational(1));
      }
    }
  }
}

TEST_SUITE("shifted_mu") {
  TEST_CASE("zero shift is the plain measure") {
    const BetaSpec b = BetaSpec::from_expansion("101");
    const Rational p(1, 2);
    for (const std::string& w : enumerate_admissible(b, 4, false)) {
      CHECK(shifted_mu(b, Word(b, w), 0, p) == mu_cylinder(Word(b, w), p));
    }
  }

  TEST_CASE("worked golden examples") {
    const BetaSpec b = BetaSpec::from_expansion("1 1");
    for (const Rational& p : {Rational(1, 3), Rational(1, 2), Rational(2, 5)}) {
      CHECK(shifted_mu(b, Word(b, "1"), 1, p) == p * (Rational(1) - p));
    }
    CHECK(shifted_mu(b, Word(b, "0"), 1, Rational(1, 2)) == Rational(3, 4));
  }

  TEST_CASE("recursion equals prefix enumeration") {
    const Rational p(3, 7);
    for (const char* tail : {"1 1", "101", "111"}) {
      const BetaSpec b = BetaSpec::from_expansion(tail);
      for (int k = 0; k <= 6; ++k) {
        for (const std::string& w : enumerate_admissible(b, 3, false)) {
          CAPTURE(tail);
          CAPTURE(w);
          CAPTURE(k);
          REQUIRE(shifted_mu(b, Word(b, w), k, p) == oracles::shifted_mu(b, w, k, p));
        }
      }
    }
  }

  TEST_CASE("guard and overrides") {
    const BetaSpec b = BetaSpec::from_expansion("1 1");
    const Word w(b, "010");
    CHECK_THROWS_AS(shifted_mu(b, w, 40, Rational(1, 2)), GuardError);
    CHECK_NOTHROW(shifted_mu(b, w, 40, Rational(1, 2), /*guard=*/64));
  }
}

TEST_SUITE("cesaro") {
  TEST_CASE("single iteration is the plain measure") {
    const BetaSpec b = BetaSpec::from_expansion("101");
    const Word w(b, "10");
    const Rational p(1, 2);
    CHECK(cesaro_mp(b, w, 1, p).value == mu_cylinder(w, p));
  }

  TEST_CASE("zero-interval limits for the first families") {
    for (int m = 0; m <= 2; ++m) {
      const BetaSpec b = BetaSpec::family_10m1(m);
      const Word zero(b, "0");
      for (double p : {0.25, 0.5, 0.75}) {
        const double limit = mp_zero_interval(p, m);
        const double est = cesaro_mp(b, zero, 4000, p).value;
        CAPTURE(m);
        CAPTURE(p);
        CHECK(std::abs(est - limit) < 1e-3);
      }
    }
  }

  TEST_CASE("golden p=1/2 converges to 2/3") {
    const BetaSpec b = BetaSpec::family_10m1(0);
    const auto est = cesaro_mp(b, Word(b, "0"), 10000, 0.5);
    CHECK(!est.hypothesis_violation);
    CHECK(std::abs(est.value - 2.0 / 3.0) < 1e-3);
  }

  TEST_CASE("shifted estimator stays within 2/K, exactly") {
    const BetaSpec b = BetaSpec::family_10m1(1);
    const Word zero(b, "0");
    const Rational p(2, 5);
    for (long K : {25L, 100L, 250L}) {
      const Rational plain = cesaro_mp(b, zero, K, p).value;
      const Rational shifted = cesaro_mp(b, zero, K, p, 1).value;
      const Rational diff = plain > shifted ? plain - shifted : shifted - plain;
      CHECK(diff <= Rational(2, K));
    }
  }

  TEST_CASE("non-simple bases are flagged") {
    const BetaSpec b = BetaSpec::from_value(Real("1.8"), 64);
    const auto est = cesaro_mp(b, Word(b, "0"), 20, 0.5);
    CHECK(est.hypothesis_violation);
    CHECK(est.value > 0.0);
    CHECK(est.value < 1.0);
  }
}

TEST_SUITE("closed forms") {
  TEST_CASE("zero interval values") {
    CHECK(mp_zero_interval(Rational(1, 2), 0) == Rational(2, 3));
    CHECK(mp_zero_interval(Rational(1, 2), 1) == Rational(3, 4));
    CHECK(mp_zero_interval(0.999999, 5) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS_AS(mp_zero_interval(Rational(0), 0), DomainError);
    CHECK_THROWS_AS(mp_zero_interval(Rational(3, 2), 0), DomainError);
    CHECK_THROWS_AS(mp_zero_interval(Rational(1, 2), -1), DomainError);
  }

  TEST_CASE("pseudo-golden values") {
    const auto [zero2, top2] = mp_pseudo_golden(Rational(1, 2), 2);
    CHECK(zero2 == Rational(2, 3));
    CHECK(zero2 == mp_zero_interval(Rational(1, 2), 0));  // both describe the golden base
    const auto [zero3, top3] = mp_pseudo_golden(Rational(1, 2), 3);
    CHECK(zero3 == Rational(4, 7));
    CHECK(top3 == Rational(1, 7));
    const auto [zl, tl] = mp_pseudo_golden(0.999999, 4);
    CHECK(zl == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(tl == doctest::Approx(0.0).epsilon(1e-4));
    CHECK_THROWS_AS(mp_pseudo_golden(Rational(1, 2), 1), DomainError);
  }

  TEST_CASE("cross-family identity is exact on a dense grid") {
    for (int i = 1; i <= 99; ++i) {
      const Rational p(i, 100);
      CHECK(mp_zero_interval(p, 0) == mp_pseudo_golden(p, 2).first);
    }
  }

  TEST_CASE("pseudo-golden zero interval against the Cesaro recursion") {
    const BetaSpec b = BetaSpec::family_ones(3);
    const Word zero(b, "0");
    for (double p : {0.3, 0.5, 0.7}) {
      const double est = cesaro_mp(b, zero, 4000, p).value;
      CHECK(std::abs(est - mp_pseudo_golden(p, 3).first) < 1e-3);
    }
    // top interval: the cylinder 11 on the 1110... base
    const Word ones(b, "11");
    const double est_top = cesaro_mp(b, ones, 4000, 0.5).value;
    CHECK(std::abs(est_top - mp_pseudo_golden(0.5, 3).second) < 1e-3);
  }
}

TEST_SUITE("comparability reports") {
  TEST_CASE("quasi-Bernoulli window on the golden base") {
    const BetaSpec b = BetaSpec::from_expansion("1 1");
    const Rational p(1, 2);
    const auto rep = quasi_bernoulli_report(b, 6, p);
    CHECK(rep.simple);
    CHECK(rep.holds);
    CHECK(rep.min_ratio >= Rational(1));
    CHECK(rep.max_ratio <= Rational(4));  // p^-M with M=2
    CHECK(*rep.bound == Rational(4));
    // the worst pair must be a genuine witness
    const Word w(b, rep.witness_w), v(b, rep.witness_v);
    const Word wv(b, rep.witness_w + rep.witness_v);
    CHECK(mu_cylinder(wv, p) == rep.max_ratio * mu_cylinder(w, p) * mu_cylinder(v, p));
  }

  TEST_CASE("full first factor forces ratio one") {
    const BetaSpec b = BetaSpec::from_expansion("101");
    const Rational p(2, 5);
    for (const std::string& w : enumerate_admissible(b, 5, true)) {
      for (const std::string& v : enumerate_admissible(b, 5, false)) {
        if (!is_admissible(b, w + v)) continue;
        CHECK(mu_cylinder(Word(b, w + v), p) == mu_cylinder(Word(b, w), p) * mu_cylinder(Word(b, v), p));
      }
    }
  }

  TEST_CASE("strong quasi-invariance on simple bases") {
    const BetaSpec b = BetaSpec::from_expansion("111");
    const Rational p(1, 3);
    const auto rep = strong_quasi_invariance_report(b, 5, 5, p);
    CHECK(rep.applicable);
    CHECK(rep.holds);
    CHECK(*rep.lower_bound == Rational(1, 27));
    CHECK(*rep.upper_bound == Rational(27));
  }

  TEST_CASE("zero shift gives ratio one") {
    const BetaSpec b = BetaSpec::from_expansion("1 1");
    const auto rep = strong_quasi_invariance_report(b, 0, 4, Rational(1, 2));
    CHECK(rep.min_ratio == Rational(1));
    CHECK(rep.max_ratio == Rational(1));
  }

  TEST_CASE("non-simple witness ratios blow up") {
    const BetaSpec b = BetaSpec::from_value(Real("1.8"), 64);
    const auto [r10, d10] = nonsimple_shift_blowup(b, Rational(1, 2), 10);
    const auto [r40, d40] = nonsimple_shift_blowup(b, Rational(1, 2), 40);
    CHECK(r40 >= r10);
    CHECK(r40 > Rational(100));
    CHECK(d40 <= 40);
  }
}
