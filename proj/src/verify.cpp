#include "betashift/verify.hpp"

#include <cmath>
#include <sstream>

#include "betashift/dimension.hpp"
#include "betashift/markov.hpp"
#include "betashift/measure.hpp"
#include "betashift/sim.hpp"
#include "betashift/words.hpp"

namespace betashift {

namespace {

std::string fmt(double x) { return format_double(x); }

void add(std::vector<CheckResult>& out, const std::string& id, bool pass, const std::string& detail) {
  out.push_back(CheckResult{id, pass, detail});
}

// ---- naive oracles, independent of the automaton path ----

// Parry criterion by direct lexicographic scan of every shifted suffix
// against the quasi-expansion.
bool naive_admissible(const BetaSpec& b, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int k = 0; k < n; ++k) {
    for (int j = 1; j + k <= n; ++j) {
      const int wd = w[static_cast<std::size_t>(k + j - 1)];
      const int ed = b.eps_star(static_cast<std::size_t>(j));
      if (wd < ed) break;
      if (wd > ed) return false;
    }
  }
  return true;
}

int naive_state(const BetaSpec& b, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  const SimpleInfo info = b.simpleness();
  const int cap = info.kind == Simpleness::Simple ? *info.length - 1 : n;
  for (int t = std::min(cap, n); t >= 1; --t) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) {
      ok = w[static_cast<std::size_t>(n - t + i)] == b.eps(static_cast<std::size_t>(i + 1));
    }
    if (ok) return t;
  }
  return 0;
}

std::vector<int> bits_of(std::uint32_t mask, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
  return w;
}

std::uint64_t brute_force_count(const BetaSpec& b, int n) {
  const std::uint32_t top = 1u << n;
  std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
  for (std::uint32_t mask = 0; mask < top; ++mask) {
    if (naive_admissible(b, bits_of(mask, n))) ++count;
  }
  return count;
}

struct Family {
  std::string name;
  BetaSpec spec;
  int m;  // 10^m 1 family index, -1 otherwise
};

std::vector<Family> standard_families() {
  std::vector<Family> fams;
  fams.push_back({"golden", BetaSpec::family_10m1(0), 0});
  fams.push_back({"10m1-m1", BetaSpec::family_10m1(1), 1});
  fams.push_back({"10m1-m2", BetaSpec::family_10m1(2), 2});
  fams.push_back({"ones-m3", BetaSpec::family_ones(3), -1});
  return fams;
}

}  // namespace

// ---------------------------------------------------------------- words

std::vector<CheckResult> verify_combinatorics(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const int L = opt.max_word_len;
  const int bf = opt.brute_force_len;

  for (const Family& fam : standard_families()) {
    const BetaSpec& b = fam.spec;
    const int M = *b.finite_length();

    // automaton vs the naive Parry scan, every word up to min(L, 12)
    {
      bool ok = true;
      long tested = 0;
      const int lim = std::min(L + 2, 12);
      for (std::uint32_t n = 1; n <= static_cast<std::uint32_t>(lim) && ok; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n) && ok; ++mask) {
          const std::vector<int> w = bits_of(mask, static_cast<int>(n));
          std::string s;
          for (int d : w) s.push_back(char('0' + d));
          const bool naive = naive_admissible(b, w);
          const bool fast = is_admissible(b, s);
          ok = naive == fast;
          if (ok && fast) {
            ok = naive_state(b, w) == Word(b, s).parry_state();
          }
          ++tested;
        }
      }
      add(out, "automaton-vs-naive-scan[" + fam.name + "]", ok,
          std::to_string(tested) + " words up to length " + std::to_string(std::min(L + 2, 12)));
    }

    // brute-force word counts
    {
      bool ok = true;
      std::ostringstream detail;
      const std::vector<std::uint64_t> counts = count_admissible(b, bf);
      for (int n = 1; n <= bf && ok; ++n) {
        const std::uint64_t expect = brute_force_count(b, n);
        ok = counts[static_cast<std::size_t>(n - 1)] == expect;
        if (n <= 5) detail << counts[static_cast<std::size_t>(n - 1)] << (n < 5 ? "," : ",...");
      }
      add(out, "word-counts-vs-bruteforce[" + fam.name + "]", ok,
          "lengths 1.." + std::to_string(bf) + ": " + detail.str());
    }

    // free-zero counter laws over all admissible pairs
    {
      std::vector<detail::ScannedWord> words = detail::collect_words(b, L);
      bool sub_ok = true, full_ok = true, defect_ok = true;
      long pairs = 0;
      for (const auto& w : words) {
        const bool w_full = ParryAutomaton::full_state(w.state);
        for (const auto& v : words) {
          const std::optional<long> extra = detail::extra_free_zeros(b, w.state, v.digits);
          if (!extra) continue;
          ++pairs;
          const long concat_n0 = w.n0 + *extra;
          sub_ok = sub_ok && w.n0 <= concat_n0 && concat_n0 <= w.n0 + v.n0;
          if (w_full) full_ok = full_ok && concat_n0 == w.n0 + v.n0;
          defect_ok = defect_ok && concat_n0 >= w.n0 + v.n0 - M;
        }
      }
      const std::string suffix = " over " + std::to_string(pairs) + " pairs, len<=" + std::to_string(L);
      add(out, "free-zero-subadditivity[" + fam.name + "]", sub_ok, suffix);
      add(out, "full-prefix-additivity[" + fam.name + "]", full_ok, suffix);
      add(out, "simple-defect-bound[" + fam.name + "]", defect_ok, "slack M=" + std::to_string(M) + suffix);
    }

    // closure laws of full words
    {
      bool concat_ok = true, suffix_ok = true, last_ok = true;
      long fulls = 0;
      std::vector<std::string> full_words;
      for_each_admissible(b, L, [&](const WordView& w) {
        if (!ParryAutomaton::full_state(w.state)) return;
        ++fulls;
        full_words.push_back(w.str());
        last_ok = last_ok && w.digits[w.length - 1] == 0;
        for (int k = 1; k < w.length; ++k) {
          const Word suf(b, std::string(w.str().substr(static_cast<std::size_t>(k))));
          suffix_ok = suffix_ok && suf.full();
        }
      });
      for (std::size_t i = 0; i < full_words.size() && concat_ok; ++i) {
        for (std::size_t j = 0; j < full_words.size() && concat_ok; ++j) {
          concat_ok = Word(b, full_words[i] + full_words[j]).full();
        }
      }
      add(out, "full-concat-closure[" + fam.name + "]", concat_ok, std::to_string(fulls) + " full words");
      add(out, "full-suffix-closure[" + fam.name + "]", suffix_ok, "all shifts of full words");
      add(out, "full-last-digit-zero[" + fam.name + "]", last_ok, "bases below 2");
    }

    // quasi-expansion prefixes: full iff the finite length divides
    {
      bool ok = true;
      for (int k = 1; k <= 4 * M; ++k) {
        std::string w;
        for (int j = 1; j <= k; ++j) w.push_back(char('0' + b.eps_star(static_cast<std::size_t>(j))));
        ok = ok && Word(b, w).full() == (k % M == 0);
      }
      add(out, "quasi-prefix-full-divisibility[" + fam.name + "]", ok, "k up to 4M, M=" + std::to_string(M));
      bool trunc_ok = true;
      for (int k = 1; k < M; ++k) {
        std::string w;
        for (int j = 1; j <= k; ++j) w.push_back(char('0' + b.eps(static_cast<std::size_t>(j))));
        trunc_ok = trunc_ok && !Word(b, w).full();
      }
      add(out, "expansion-prefix-not-full[" + fam.name + "]", trunc_ok, "admissible truncations");
    }

    // cylinder geometry
    {
      const ParryAutomaton& a = b.automaton();
      bool tele_ok = true;
      const Real beta = b.value();
      for (int s = 0; s < a.states(); ++s) {
        Real rhs = b.y_r(a.next(s, 0));
        if (a.one_allowed(s)) rhs += b.y_r(a.next(s, 1));
        tele_ok = tele_ok && abs(beta * b.y_r(s) - rhs) < Real("1e-38");
      }
      double cmin = 1.0;
      for (int s = 0; s < a.states(); ++s) cmin = std::min(cmin, b.y(s));
      bool bounds_ok = cmin > 0.0;
      bool exact_ok = true;
      for_each_admissible(b, std::min(L, 10), [&](const WordView& w) {
        const Word word(b, std::string(w.str()));
        const CylinderInterval iv = cylinder_interval(word);
        const double unit = b.pow_minus(w.length);
        bounds_ok = bounds_ok && iv.length >= cmin * unit * (1 - 1e-12) && iv.length <= unit * (1 + 1e-12);
        if (ParryAutomaton::full_state(w.state)) exact_ok = exact_ok && iv.length == unit;
      });
      add(out, "cylinder-state-telescoping[" + fam.name + "]", tele_ok, "beta*y_s = sum of child y");
      add(out, "cylinder-length-bounds[" + fam.name + "]", bounds_ok, "c=" + fmt(cmin));
      add(out, "full-cylinder-length-exact[" + fam.name + "]", exact_ok, "length == beta^-n on full words");
    }

    // zero-slack bounds n <= N0 + (m+2) N1 <= n + m + 1 for the 10^m 1 rows
    if (fam.m >= 0) {
      const int m = fam.m;
      bool ok = true;
      long tested = 0;
      const int top = opt.deep ? 16 : std::max(L, m + 4);
      for_each_admissible(b, top, [&](const WordView& w) {
        if (w.length < m + 2) return;
        const long mid = w.n0 + (m + 2) * w.n1;
        ok = ok && w.length <= mid && mid <= w.length + m + 1;
        ++tested;
      });
      add(out, "zero-slack-bounds[" + fam.name + "]", ok,
          std::to_string(tested) + " words, len<=" + std::to_string(top));
    }
  }

  // unbounded growth of free zeros along random admissible streams
  {
    bool ok = true;
    const long streams = opt.deep ? 1000 : 200;
    const long length = 1000;
    for (const Family& fam : standard_families()) {
      if (fam.m < 0) continue;
      const double p = 0.6;  // free-zero rate strictly above 1/(m+3)
      for (long t = 0; t < streams && ok; ++t) {
        const std::vector<std::uint8_t> digits = walk_sample(fam.spec, p, length, opt.seed, static_cast<std::uint64_t>(t));
        const Word w(fam.spec, digits);
        ok = w.n0() >= length / (fam.m + 3);
        // a full prefix must occur
        ok = ok && tau_prime(w) >= 1;
      }
    }
    add(out, "free-zero-unbounded-growth", ok,
        std::to_string(streams) + " walk streams of length " + std::to_string(length));
  }

  return out;
}

// -------------------------------------------------------------- measures

std::vector<CheckResult> verify_measures(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const std::vector<Rational> ps = {Rational(1, 3), Rational(1, 2), Rational(2, 5)};

  for (const Family& fam : standard_families()) {
    if (fam.name == "ones-m3") continue;  // covered via golden/cross-family identities
    const BetaSpec& b = fam.spec;
    const int M = *b.finite_length();

    // exact consistency and total mass
    {
      bool consist_ok = true, mass_ok = true;
      const int n = opt.deep ? 12 : 10;
      for (const Rational& p : ps) {
        const Rational q = Rational(1) - p;
        std::vector<Rational> level_mass(static_cast<std::size_t>(n) + 1, Rational(0));
        for_each_admissible(b, n, [&](const WordView& w) {
          const Rational mu = ipow(p, w.n0) * ipow(q, w.n1);
          level_mass[static_cast<std::size_t>(w.length)] += mu;
          if (w.length == n) return;
          // rebuild the children from scratch so the counter bookkeeping is
          // what is being tested
          const std::string s = w.str();
          Rational child_sum = mu_cylinder(Word(b, s + "0"), p);
          if (b.automaton().one_allowed(w.state)) child_sum += mu_cylinder(Word(b, s + "1"), p);
          consist_ok = consist_ok && child_sum == mu;
        });
        for (int k = 1; k <= n; ++k) mass_ok = mass_ok && level_mass[static_cast<std::size_t>(k)] == Rational(1);
      }
      add(out, "children-sum-consistency[" + fam.name + "]", consist_ok, "exact, n<=" + std::to_string(n));
      add(out, "total-mass-one[" + fam.name + "]", mass_ok, "exact, n<=" + std::to_string(n));
    }

    // monotone under extension: mu[w] >= mu[wv] >= mu[w] mu[v]
    {
      bool ok = true;
      const Rational p(2, 5);
      std::vector<detail::ScannedWord> words = detail::collect_words(b, std::min(opt.max_word_len, 6));
      for (const auto& w : words) {
        for (const auto& v : words) {
          const std::optional<long> extra = detail::extra_free_zeros(b, w.state, v.digits);
          if (!extra) continue;
          const Word ww(b, w.digits);
          const Word vv(b, v.digits);
          const Rational mu_w = mu_cylinder(ww, p);
          const Rational mu_v = mu_cylinder(vv, p);
          const Rational mu_wv = mu_w * conditional_mu(b, w.state, vv.digits().data(), vv.size(), p);
          ok = ok && mu_w >= mu_wv && mu_wv >= mu_w * mu_v;
          if (!ok) break;
        }
        if (!ok) break;
      }
      add(out, "extension-monotonicity[" + fam.name + "]", ok, "exact, len<=6");
    }

    // quasi-Bernoulli range and the simple-base bound
    {
      const Rational p(1, 2);
      const auto rep = quasi_bernoulli_report(b, opt.max_word_len, p);
      const bool ok = rep.holds && rep.min_ratio >= Rational(1) && rep.max_ratio <= *rep.bound;
      add(out, "quasi-bernoulli-bounds[" + fam.name + "]", ok,
          "max ratio " + format_rational(rep.max_ratio) + " <= p^-M = " + format_rational(*rep.bound) +
              " over " + std::to_string(rep.pairs) + " pairs");

      // full first factor gives exact factorization
      bool full_exact = true;
      std::vector<detail::ScannedWord> words = detail::collect_words(b, std::min(opt.max_word_len, 6));
      for (const auto& w : words) {
        if (!ParryAutomaton::full_state(w.state)) continue;
        for (const auto& v : words) {
          const std::optional<long> extra = detail::extra_free_zeros(b, w.state, v.digits);
          if (!extra) continue;
          full_exact = full_exact && *extra == v.n0;
        }
      }
      add(out, "full-factor-exact-product[" + fam.name + "]", full_exact, "mu[wv] = mu[w]mu[v] when w full");
    }

    // strong quasi-invariance window
    {
      const Rational p(1, 2);
      const auto rep = strong_quasi_invariance_report(b, 6, 6, p);
      add(out, "strong-quasi-invariance[" + fam.name + "]", rep.applicable && rep.holds,
          "ratios in [" + format_rational(*rep.lower_bound) + ", " + format_rational(*rep.upper_bound) +
              "], M=" + std::to_string(M));
    }
  }

  // shift worked example on the golden base
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    bool ok = true;
    for (const Rational& p : ps) {
      const Rational q = Rational(1) - p;
      const Word one(golden, "1");
      ok = ok && mu_cylinder(one, p) == q;
      ok = ok && shifted_mu(golden, one, 1, p) == p * q;
    }
    add(out, "shift-worked-example", ok, "mu[1] = 1-p and sigma mu[1] = p(1-p), exact");
  }

  // Cesaro vs the closed form, exact cross-family identity, shift stability
  {
    bool closed_ok = true;
    std::ostringstream detail;
    const long K = opt.deep ? 10000 : 2000;
    for (int m = 0; m <= 2; ++m) {
      const BetaSpec fam = BetaSpec::family_10m1(m);
      const Word zero(fam, "0");
      for (double p : {0.25, 0.5, 0.75}) {
        const auto est = cesaro_mp(fam, zero, K, p);
        const double expect = mp_zero_interval(p, m);
        closed_ok = closed_ok && std::abs(est.value - expect) < 1e-3;
        if (m == 0 && p == 0.5) detail << "m=0,p=1/2: " << fmt(est.value) << " vs " << fmt(expect);
      }
    }
    add(out, "cesaro-zero-interval-closed-form", closed_ok, "K=" + std::to_string(K) + "; " + detail.str());

    bool cross_ok = true;
    for (int i = 1; i <= 99; ++i) {
      const Rational p(i, 100);
      cross_ok = cross_ok && mp_zero_interval(p, 0) == mp_pseudo_golden(p, 2).first;
    }
    add(out, "cross-family-zero-interval-identity", cross_ok, "exact on the 99-point grid");

    const BetaSpec golden = BetaSpec::family_10m1(0);
    const Word zero(golden, "0");
    const Rational p(1, 2);
    bool shift_ok = true;
    for (long Kexact : {50L, 100L, 400L}) {
      const Rational plain = cesaro_mp(golden, zero, Kexact, p).value;
      const Rational shifted = cesaro_mp(golden, zero, Kexact, p, /*start=*/1).value;
      const Rational diff = plain > shifted ? plain - shifted : shifted - plain;
      shift_ok = shift_ok && diff <= Rational(2, Kexact);
    }
    add(out, "cesaro-shift-stability", shift_ok, "|plain - shifted| <= 2/K, exact");
  }

  // non-simple witness: the quasi-Bernoulli/quasi-invariance ratios blow up
  {
    const BetaSpec b18 = BetaSpec::from_value(Real("1.8"));
    const auto [ratio, depth] = nonsimple_shift_blowup(b18, Rational(1, 2), 40);
    add(out, "nonsimple-shift-blowup", ratio > Rational(100),
        "beta=1.8: ratio " + fmt(to_double(ratio)) + " at depth " + std::to_string(depth));
  }

  // sampled walk distributes exactly as mu_p over prefix cylinders
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    const long streams = opt.deep ? 20000 : 4000;
    const double worst = walk_prefix_worst_z(golden, 0.5, 3, streams, opt.seed);
    add(out, "walk-prefix-distribution", worst <= 4.0,
        "worst |z| = " + fmt(worst) + " over order-3 cylinders, " + std::to_string(streams) + " streams");
  }

  // atoms vanish along sampled streams: mu of the length-n prefix decays
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    bool ok = true;
    for (long t = 0; t < 16 && ok; ++t) {
      const std::vector<std::uint8_t> digits = walk_sample(golden, 0.5, 2000, opt.seed, 7000 + static_cast<std::uint64_t>(t));
      const Word w(golden, digits);
      const double bound = std::pow(0.5, static_cast<double>(w.n0() + w.n1()));
      ok = to_double(mu_cylinder(w, 0.5)) <= bound && w.n0() > 100;
    }
    add(out, "vanishing-atoms", ok, "mu of prefixes decays along sampled streams");
  }

  // two independent long runs of the Monte Carlo estimator agree
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    const std::vector<std::uint8_t> zero{0};
    const long K = opt.deep ? 20000 : 5000;
    const McCesaro a = mc_cesaro(golden, 0.5, zero, K, 32, opt.seed);
    const McCesaro c = mc_cesaro(golden, 0.5, zero, K, 32, opt.seed + 101);
    const bool ok = std::abs(a.value - c.value) <= a.half_width + c.half_width + 2.0 / static_cast<double>(K);
    add(out, "ergodic-two-run-agreement", ok,
        fmt(a.value) + " vs " + fmt(c.value) + " (half-widths " + fmt(a.half_width) + ", " + fmt(c.half_width) + ")");
  }

  return out;
}

// ---------------------------------------------------------------- markov

std::vector<CheckResult> verify_markov(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  Rational default_p(2, 5);
  if (!opt.p_text.empty()) {
    const Prob parsed = parse_probability(opt.p_text);
    if (!parsed.exact) throw DomainError("verify wants a rational parameter like 2/5");
    default_p = parsed.r;
    require_open_unit(default_p, "p");
  }

  const int m_lo = opt.only_m >= 0 ? opt.only_m : 0;
  const int m_hi = opt.only_m >= 0 ? opt.only_m : 2;
  for (int m = m_lo; m <= m_hi; ++m) {
    const BetaSpec fam = BetaSpec::family_10m1(m);
    const int k = m + 1;
    const std::string tag = "[m=" + std::to_string(m) + "]";
    const Rational p = default_p;
    const Rational q = Rational(1) - p;

    // the k-step ratio condition for mu_p and its shifts
    {
      bool ok = true;
      long tested = 0;
      const int maxlen = m + (opt.deep ? 8 : 7);
      for_each_admissible(fam, maxlen, [&](const WordView& w) {
        if (w.length < k + 2) return;  // need n >= 1
        const std::string full = w.str();
        const std::string head = full.substr(0, full.size() - 1);
        const std::string tail_long = full.substr(full.size() - static_cast<std::size_t>(k) - 1);
        const std::string tail_short = tail_long.substr(0, tail_long.size() - 1);
        const Word w_full(fam, full), w_head(fam, head);
        const Word w_tl(fam, tail_long), w_ts(fam, tail_short);
        const Rational rhs = mu_cylinder(w_tl, p) / mu_cylinder(w_ts, p);
        ok = ok && mu_cylinder(w_full, p) * mu_cylinder(w_ts, p) == mu_cylinder(w_tl, p) * mu_cylinder(w_head, p);
        for (long j = 1; j <= 4 && ok; ++j) {
          const Rational num = shifted_mu(fam, w_full, j, p, 64);
          const Rational den = shifted_mu(fam, w_head, j, p, 64);
          ok = den != 0 && num == rhs * den;
        }
        ++tested;
      });
      add(out, "markov-ratio-identity" + tag, ok,
          std::to_string(tested) + " words, shifts j<=4, exact at p=2/5");
    }

    const MarkovMeasure<Rational> mm = markov_from_mu(fam, p);

    // stochasticity and exact stationarity
    {
      bool rows_ok = true, pi_ok = true;
      Rational pi_sum(0);
      for (std::size_t i = 0; i < mm.states.size(); ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < mm.states.size(); ++j) row += mm.trans[i][j];
        rows_ok = rows_ok && row == Rational(1);
        pi_sum += mm.pi[i];
        Rational flow(0);
        for (std::size_t j = 0; j < mm.states.size(); ++j) flow += mm.pi[j] * mm.trans[j][i];
        pi_ok = pi_ok && flow == mm.pi[i];
      }
      pi_ok = pi_ok && pi_sum == Rational(1);
      add(out, "markov-row-stochastic" + tag, rows_ok, std::to_string(mm.states.size()) + " states");
      add(out, "markov-stationarity-exact" + tag, pi_ok, "pi P = pi and sum pi = 1, exact");
    }

    // zero mass equals the ergodic closed form
    {
      const Rational a = markov_zero_mass(mm);
      const bool ok = a == mp_zero_interval(p, m);
      add(out, "markov-zero-mass-closed-form" + tag, ok, format_rational(a));
    }

    // uniqueness relations on cylinders of order <= m+2
    {
      const Rational a = mp_zero_interval(p, m);
      bool ok = true;
      for (int j = 1; j <= m + 2; ++j) {
        ok = ok && mm_cylinder(mm, std::string(static_cast<std::size_t>(j), '0')) == Rational(j) * a - Rational(j) + 1;
      }
      for (int i = 0; i <= m + 1 && ok; ++i) {
        for (int j = 0; j <= m + 1 && ok; ++j) {
          const std::string w = std::string(static_cast<std::size_t>(i), '0') + "1" +
                                std::string(static_cast<std::size_t>(j), '0');
          if (!is_admissible(fam, w)) continue;
          ok = mm_cylinder(mm, w) == Rational(1) - a;
        }
      }
      add(out, "markov-uniqueness-relations" + tag, ok, "lambda[0^j] = ja-j+1 and lambda[0^i 1 0^j] = 1-a, exact");
    }

    // states that force the next digit have deterministic rows
    {
      bool ok = true;
      for (std::size_t i = 0; i < mm.states.size(); ++i) {
        const Word u(fam, mm.states[i]);
        if (fam.automaton().one_allowed(u.parry_state())) continue;
        int nonzero = 0;
        for (std::size_t j = 0; j < mm.states.size(); ++j) {
          if (mm.trans[i][j] != 0) {
            ++nonzero;
            ok = ok && mm.trans[i][j] == Rational(1);
          }
        }
        ok = ok && nonzero == 1;
      }
      add(out, "markov-forced-rows-deterministic" + tag, ok, "forced continuations are 0/1 rows");
    }

    // chain cylinders match the Cesaro limit of the shifted walk measures
    {
      const long K = opt.deep ? 20000 : 5000;
      bool ok = true;
      double worst = 0.0;
      for_each_admissible(fam, k + 1, [&](const WordView& w) {
        const Word word(fam, std::string(w.str()));
        const double cesaro = to_double(cesaro_mp(fam, word, K, to_double(p)).value);
        const double chain = to_double(mm_cylinder(mm, w.str()));
        worst = std::max(worst, std::abs(cesaro - chain));
      });
      ok = worst < 5e-3;
      add(out, "markov-matches-cesaro-limit" + tag, ok,
          "max gap " + fmt(worst) + " at K=" + std::to_string(K));
    }
  }

  return out;
}

// ------------------------------------------------------------- dimension

std::vector<CheckResult> verify_dimension(const VerifyOptions& opt) {
  std::vector<CheckResult> out;

  // variational identity, dominance and endpoints per family
  for (int m = 0; m <= 2; ++m) {
    const BetaSpec fam = BetaSpec::family_10m1(m);
    const std::string tag = "[m=" + std::to_string(m) + "]";
    const double lo = double(m + 1) / double(m + 2);
    bool var_ok = true, dom_ok = true;
    double worst = 0.0;
    for (int i = 1; i < opt.grid; ++i) {
      const double p = lo + (1.0 - lo) * static_cast<double>(i) / static_cast<double>(opt.grid);
      const DimReport rep = dim_level_set(p, m);
      const MarkovMeasure<double> mm = markov_from_mu(fam, rep.q);
      const double gap = std::abs(markov_entropy(mm) - rep.dim * fam.log_beta());
      worst = std::max(worst, gap);
      var_ok = var_ok && gap < 1e-10;
      dom_ok = dom_ok && rep.dim <= dim_upper_bound(p, fam.value_d()).value + 1e-12;
    }
    add(out, "variational-identity" + tag, var_ok,
        "max |entropy - dim log beta| = " + fmt(worst) + " on a " + std::to_string(opt.grid) + "-point grid");
    add(out, "dimension-dominance" + tag, dom_ok, "level-set dim <= binary-entropy bound");
    const bool end_ok = dim_level_set(lo, m).dim == 0.0 && dim_level_set(1.0, m).dim == 0.0;
    add(out, "dimension-endpoint-zeros" + tag, end_ok, "exact zeros at (m+1)/(m+2) and 1");
  }

  // golden-base closed form reproduced digit for digit
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    const double logb = golden.log_beta();
    bool ok = true;
    double worst = 0.0;
    for (int i = 1; i < 2 * opt.grid; ++i) {
      const double p = 0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(2 * opt.grid);
      auto xlx = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
      const double direct = (xlx(p) - xlx(2 * p - 1) - xlx(1 - p)) / logb;
      const double gap = std::abs(dim_level_set(p, 0).dim - direct);
      worst = std::max(worst, gap);
      ok = ok && gap < 1e-12;
    }
    add(out, "golden-formula-reproduction", ok, "max gap " + fmt(worst));
  }

  // entropy-gap package on the 99-point grid
  {
    bool pos_ok = true;
    double min_gap = 1.0, min_sep = 1.0;
    for (int i = 1; i <= 99; ++i) {
      const double p = static_cast<double>(i) / 100.0;
      const EntropyGap g = entropy_gap_counter(p);
      pos_ok = pos_ok && g.a >= 1.0 / 3.0 - 1e-14;
      pos_ok = pos_ok && g.b >= (1.0 - g.a) / 2.0 - 1e-12 && g.b <= std::min(g.a, 1.0 - g.a) + 1e-12;
      pos_ok = pos_ok && g.gap > 0.0 && std::abs(g.b - g.x_star) > 1e-9;
      min_gap = std::min(min_gap, g.gap);
      min_sep = std::min(min_sep, std::abs(g.b - g.x_star));
    }
    add(out, "entropy-gap-positive-grid", pos_ok,
        "gap > 0 and b != x* on all 99 points; min gap " + fmt(min_gap) + ", min |b - x*| " + fmt(min_sep));
    // The quantitative threshold is a known defect of the target contract:
    // b -> x* as p -> 1, so the (always positive) gap decays through 1e-6
    // at the last grid points.  Kept as stated; expected to fail there.
    add(out, "entropy-gap-threshold-1e-6", min_gap > 1e-6,
        "min gap " + fmt(min_gap) + " (decays below 1e-6 for p >= 0.97; known contract defect)");
  }

  // closed-form maximizer vs golden-section search
  {
    bool ok = true;
    double worst = 0.0;
    for (int i = 1; i <= 19; ++i) {
      const double p = static_cast<double>(i) / 20.0;
      const EntropyGap g = entropy_gap_counter(p);
      double lo = (1.0 - g.a) / 2.0, hi = std::min(g.a, 1.0 - g.a);
      const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
      double f1 = entropy_gap_objective(g.a, x1), f2 = entropy_gap_objective(g.a, x2);
      while (hi - lo > 1e-12) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + phi * (hi - lo);
          f2 = entropy_gap_objective(g.a, x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - phi * (hi - lo);
          f1 = entropy_gap_objective(g.a, x1);
        }
      }
      worst = std::max(worst, std::abs((lo + hi) / 2 - g.x_star));
      ok = ok && worst < 1e-8;
    }
    add(out, "gap-maximizer-vs-golden-section", ok, "max |x* - argmax| = " + fmt(worst));
  }

  // stationary frequency of the maximizing chain
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    const MarkovMeasure<double> mm = markov_from_mu(golden, 2.0 / 3.0);
    const FreqReport rep = frequency_simulation(mm, opt.mc_length, opt.mc_streams, opt.seed);
    add(out, "markov-frequency-simulation", rep.sigmas <= 4.0,
        "zero freq " + fmt(rep.mean) + " vs " + fmt(rep.predicted) + " (" + fmt(rep.sigmas) + " sigma)");
  }

  // local dimension trajectory at the maximizing parameter
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    const MarkovMeasure<double> mm = markov_from_mu(golden, 2.0 / 3.0);
    const long n = opt.deep ? 1000000 : 200000;
    const std::vector<std::uint8_t> stream = markov_sample(mm, n, opt.seed, 3);
    const double ratio = local_dim_estimate(golden, stream, 2.0 / 3.0, {n})[0];
    const double expect = dim_level_set(0.75, 0).dim;
    add(out, "local-dimension-trajectory", std::abs(ratio - expect) < 1e-2,
        fmt(ratio) + " vs dim " + fmt(expect) + " at n=" + std::to_string(n));
  }

  // tail bounds collapse at the endpoints
  {
    const BetaSpec golden = BetaSpec::family_10m1(0);
    const auto near0 = dim_tail_bounds(1e-9, golden.value_d());
    const auto near1 = dim_tail_bounds(1.0 - 1e-9, golden.value_d());
    const bool ok = near0.first < 1e-6 && near1.second < 1e-6;
    add(out, "tail-bounds-endpoint-collapse", ok,
        "low-set bound " + fmt(near0.first) + ", high-set bound " + fmt(near1.second));
  }

  return out;
}

std::vector<CheckResult> verify_suite(const std::string& name, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& suite) {
    std::vector<CheckResult> part;
    if (suite == "combinatorics") part = verify_combinatorics(opt);
    if (suite == "measures") part = verify_measures(opt);
    if (suite == "markov") part = verify_markov(opt);
    if (suite == "dimension") part = verify_dimension(opt);
    out.insert(out.end(), part.begin(), part.end());
  };
  if (name == "all") {
    run("combinatorics");
    run("measures");
    run("markov");
    run("dimension");
  } else if (name == "combinatorics" || name == "measures" || name == "markov" || name == "dimension") {
    run(name);
  } else {
    throw DomainError("unknown suite '" + name + "' (combinatorics|measures|markov|dimension|all)");
  }
  return out;
}

}  // namespace betashift
