#include "betashift/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "betashift/dimension.hpp"
#include "betashift/markov.hpp"
#include "betashift/measure.hpp"
#include "betashift/sim.hpp"
#include "betashift/verify.hpp"
#include "betashift/words.hpp"

namespace betashift {

namespace {

using json = nlohmann::ordered_json;

struct BaseArgs {
  std::string expansion;
  std::string beta_text;
  std::string family;
  int m = -1;
  int depth = BetaSpec::kDefaultDepth;

  void attach(CLI::App* cmd) {
    cmd->add_option("--beta-expansion", expansion, "digit tail of the expansion of 1 (e.g. \"1 1\", \"1 0^2 1\", \"1 per(10)\")");
    cmd->add_option("--beta", beta_text, "numeric base (decimal string), digits computed greedily");
    cmd->add_option("--family", family, "family shorthand: 10m1 or ones (with --m)");
    cmd->add_option("--m", m, "family index for --family");
    cmd->add_option("--depth", depth, "truncation depth for numeric bases")->capture_default_str();
  }

  bool given() const { return !expansion.empty() || !beta_text.empty() || !family.empty(); }

  BetaSpec build() const {
    const int sources = (!expansion.empty() ? 1 : 0) + (!beta_text.empty() ? 1 : 0) + (!family.empty() ? 1 : 0);
    if (sources != 1) {
      throw DomainError("provide exactly one of --beta-expansion, --beta, --family");
    }
    if (!expansion.empty()) return BetaSpec::from_expansion(expansion);
    if (!beta_text.empty()) return BetaSpec::from_value(Real(beta_text), depth);
    if (family == "10m1") {
      if (m < 0) throw DomainError("--family 10m1 needs --m >= 0");
      return BetaSpec::family_10m1(m);
    }
    if (family == "ones") {
      if (m < 2) throw DomainError("--family ones needs --m >= 2");
      return BetaSpec::family_ones(m);
    }
    throw DomainError("unknown family '" + family + "' (10m1|ones)");
  }
};

std::uint64_t seed_or_env(std::optional<std::uint64_t> cli_seed) {
  if (cli_seed) return *cli_seed;
  if (const char* env = std::getenv("BETASHIFT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 20259371ull;
}

std::string join_digits(const std::vector<int>& digits) {
  bool wide = false;
  for (int d : digits) wide = wide || d > 9;
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i && (wide || digits[i] > 1 || s.find_first_not_of("01") != std::string::npos)) s += ' ';
    s += std::to_string(digits[i]);
  }
  // compact join only when every digit is 0/1
  bool binary = true;
  for (int d : digits) binary = binary && d <= 1;
  if (binary) {
    s.clear();
    for (int d : digits) s += char('0' + d);
  }
  return s;
}

struct GridSpec {
  double lo = 0.0, hi = 1.0;
  int n = 0;
  static GridSpec parse(const std::string& text) {
    GridSpec g;
    std::istringstream is(text);
    char c1 = 0, c2 = 0;
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.n) || c1 != ':' || c2 != ':' || g.n < 2) {
      throw DomainError("bad grid '" + text + "' (want lo:hi:n with n >= 2)");
    }
    return g;
  }
  double at(int i) const { return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1); }
};

json word_report(const BetaSpec& b, const std::string& text) {
  const Word w(b, text);
  json j;
  j["word"] = text;
  j["admissible"] = true;
  j["full"] = w.full();
  j["parry_state"] = w.parry_state();
  j["n0"] = w.n0();
  j["n1"] = w.n1();
  j["m_index"] = m_index(w);
  j["tau"] = tau(w);
  j["tau_prime"] = tau_prime(w);
  return j;
}

int run_verify(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " - " << r.detail << "\n";
    all = all && r.pass;
  }
  out << (all ? "OK" : "FAILED") << " (" << results.size() << " checks)\n";
  return all ? 0 : 4;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"beta-shift symbolic dynamics toolkit"};
  app.require_subcommand(1);

  // ---- expand ----
  auto* c_expand = app.add_subcommand("expand", "greedy digits of x in [0,1)");
  BaseArgs b_expand;
  b_expand.attach(c_expand);
  std::string expand_x;
  int expand_n = 16;
  c_expand->add_option("--x", expand_x, "point in [0,1), decimal string")->required();
  c_expand->add_option("--n", expand_n, "number of digits")->capture_default_str();

  // ---- eps1 ----
  auto* c_eps1 = app.add_subcommand("eps1", "expansion of 1 and the quasi-expansion");
  BaseArgs b_eps1;
  b_eps1.attach(c_eps1);
  int eps1_n = 16;
  bool eps1_quasi = false, eps1_runs = false, eps1_json = false;
  c_eps1->add_option("--n", eps1_n, "digits to print")->capture_default_str();
  c_eps1->add_flag("--quasi", eps1_quasi, "print the quasi-expansion instead");
  c_eps1->add_flag("--zero-runs", eps1_runs, "print zero run lengths l_1..l_n");
  c_eps1->add_flag("--json", eps1_json, "full JSON report");

  // ---- admissible ----
  auto* c_adm = app.add_subcommand("admissible", "test a word against the Parry criterion");
  BaseArgs b_adm;
  b_adm.attach(c_adm);
  std::string adm_word;
  c_adm->add_option("--word", adm_word, "binary word")->required();

  // ---- full ----
  auto* c_full = app.add_subcommand("full", "word report: fullness, follower state, counters");
  BaseArgs b_full;
  b_full.attach(c_full);
  std::string full_word;
  bool full_json = false;
  c_full->add_option("--word", full_word, "binary word")->required();
  c_full->add_flag("--json", full_json, "full JSON report instead of true/false");

  // ---- enumerate ----
  auto* c_enum = app.add_subcommand("enumerate", "admissible words of a given length");
  BaseArgs b_enum;
  b_enum.attach(c_enum);
  int enum_n = 4, enum_guard = kDefaultGuard;
  bool enum_full = false, enum_count = false, enum_json = false;
  c_enum->add_option("--n", enum_n, "word length")->required();
  c_enum->add_flag("--full-only", enum_full, "full words only");
  c_enum->add_flag("--count", enum_count, "emit CSV n,count for lengths 1..n");
  c_enum->add_flag("--json", enum_json, "JSON array instead of one word per line");
  c_enum->add_option("--guard", enum_guard, "enumeration size guard")->capture_default_str();

  // ---- cyl ----
  auto* c_cyl = app.add_subcommand("cyl", "cylinder interval of a word");
  BaseArgs b_cyl;
  b_cyl.attach(c_cyl);
  std::string cyl_word;
  c_cyl->add_option("--word", cyl_word, "binary word")->required();

  // ---- measure / shift-measure ----
  auto* c_meas = app.add_subcommand("measure", "mu_p of a cylinder (optionally shifted)");
  BaseArgs b_meas;
  b_meas.attach(c_meas);
  std::string meas_p, meas_word;
  long meas_shift = 0, meas_guard = kDefaultGuard;
  bool meas_qb = false, meas_sqi = false;
  int meas_maxlen = 6, meas_maxshift = 6;
  c_meas->add_option("--p", meas_p, "walk parameter; a/b selects exact mode")->required();
  c_meas->add_option("--word", meas_word, "binary word");
  c_meas->add_option("--shift", meas_shift, "shift count k for sigma^k mu_p")->capture_default_str();
  c_meas->add_option("--guard", meas_guard, "size guard for shifts")->capture_default_str();
  c_meas->add_flag("--quasi-bernoulli", meas_qb, "exhaustive quasi-Bernoulli ratio report");
  c_meas->add_flag("--strong-qi", meas_sqi, "exhaustive shift-comparability report");
  c_meas->add_option("--max-len", meas_maxlen, "report word length bound")->capture_default_str();
  c_meas->add_option("--max-shift", meas_maxshift, "report shift bound")->capture_default_str();

  auto* c_shift = app.add_subcommand("shift-measure", "sigma^k mu_p of a cylinder");
  BaseArgs b_shift;
  b_shift.attach(c_shift);
  std::string shift_p, shift_word;
  long shift_k = 0, shift_guard = kDefaultGuard;
  c_shift->add_option("--p", shift_p)->required();
  c_shift->add_option("--word", shift_word)->required();
  c_shift->add_option("--shift", shift_k)->required();
  c_shift->add_option("--guard", shift_guard)->capture_default_str();

  // ---- mp ----
  auto* c_mp = app.add_subcommand("mp", "Cesaro estimate of the ergodic measure on a cylinder");
  BaseArgs b_mp;
  b_mp.attach(c_mp);
  std::string mp_p, mp_target = "0", mp_method = "dp";
  long mp_K = 10000, mp_streams = 64;
  bool mp_closed = false;
  std::optional<std::uint64_t> mp_seed;
  c_mp->add_option("--p", mp_p, "walk parameter")->required();
  c_mp->add_option("--target", mp_target, "target word")->capture_default_str();
  c_mp->add_option("--K", mp_K, "Cesaro iterations")->capture_default_str();
  c_mp->add_option("--method", mp_method, "dp (follower-state recursion) or mc (sampling)")->capture_default_str();
  c_mp->add_option("--streams", mp_streams, "Monte Carlo streams")->capture_default_str();
  c_mp->add_flag("--closed-form", mp_closed, "also print the family closed form (needs --family)");
  bool mp_closed_only = false;
  c_mp->add_flag("--closed-form-only", mp_closed_only, "print only the closed form (data channel)");
  c_mp->add_option("--seed", mp_seed, "Monte Carlo seed");

  // ---- dim ----
  auto* c_dim = app.add_subcommand("dim", "level-set dimension formulas");
  BaseArgs b_dim;
  b_dim.attach(c_dim);
  std::string dim_p, dim_grid;
  bool dim_upper = false, dim_tails = false;
  c_dim->add_option("--p", dim_p, "digit-0 frequency");
  c_dim->add_option("--p-grid", dim_grid, "lo:hi:n CSV sweep");
  c_dim->add_flag("--upper-bound", dim_upper, "binary-entropy upper bound instead");
  c_dim->add_flag("--tail-bounds", dim_tails, "one-sided bounds for freq <= p / >= p");

  // ---- markov ----
  auto* c_markov = app.add_subcommand("markov", "(m+1)-step Markov synthesis from mu_p");
  BaseArgs b_markov;
  b_markov.attach(c_markov);
  std::string markov_p;
  c_markov->add_option("--p", markov_p, "walk parameter; a/b selects exact mode")->required();

  // ---- entropy-gap ----
  auto* c_gap = app.add_subcommand("entropy-gap", "entropy gap of the 1110... base");
  std::string gap_p, gap_grid;
  c_gap->add_option("--p", gap_p, "walk parameter");
  c_gap->add_option("--p-grid", gap_grid, "lo:hi:n CSV sweep");

  // ---- simulate ----
  auto* c_sim = app.add_subcommand("simulate", "seeded digit streams and frequency reports");
  BaseArgs b_sim;
  b_sim.attach(c_sim);
  std::string sim_law = "walk", sim_p = "0.5", sim_q;
  long sim_n = 100000, sim_streams = 16;
  bool sim_emit = false;
  std::optional<std::uint64_t> sim_seed;
  c_sim->add_option("--law", sim_law, "walk or markov")->capture_default_str();
  c_sim->add_option("--p", sim_p, "walk parameter")->capture_default_str();
  c_sim->add_option("--q", sim_q, "markov chain parameter (defaults to --p)");
  c_sim->add_option("--n", sim_n, "stream length")->capture_default_str();
  c_sim->add_option("--streams", sim_streams, "stream count")->capture_default_str();
  c_sim->add_flag("--emit", sim_emit, "print the digits of stream 0 instead of the report");
  c_sim->add_option("--seed", sim_seed, "seed (fallback: BETASHIFT_SEED)");

  // ---- localdim ----
  auto* c_loc = app.add_subcommand("localdim", "local dimension trajectory along a sampled stream");
  BaseArgs b_loc;
  b_loc.attach(c_loc);
  std::string loc_p, loc_q, loc_law = "markov", loc_depths = "100,1000,10000";
  long loc_n = 0;
  std::optional<std::uint64_t> loc_seed;
  c_loc->add_option("--p", loc_p, "measure parameter for mu_p")->required();
  c_loc->add_option("--q", loc_q, "sampling parameter (defaults to --p)");
  c_loc->add_option("--law", loc_law, "walk or markov")->capture_default_str();
  c_loc->add_option("--depths", loc_depths, "comma-separated depths")->capture_default_str();
  c_loc->add_option("--n", loc_n, "stream length (default: max depth)");
  c_loc->add_option("--seed", loc_seed, "seed");

  // ---- verify ----
  auto* c_verify = app.add_subcommand("verify", "run the property suites");
  std::string suite_name = "all";
  VerifyOptions vopt;
  std::optional<std::uint64_t> verify_seed;
  c_verify->add_option("--suite", suite_name, "combinatorics|measures|markov|dimension|all")->capture_default_str();
  c_verify->add_option("--m", vopt.only_m, "restrict the family-indexed checks to one family");
  c_verify->add_option("--p", vopt.p_text, "rational parameter override (a/b) for the markov suite");
  c_verify->add_option("--max-len", vopt.max_word_len, "exhaustive scan length")->capture_default_str();
  c_verify->add_option("--grid", vopt.grid, "dimension grid points")->capture_default_str();
  c_verify->add_flag("--deep", vopt.deep, "acceptance-sized runs");
  c_verify->add_option("--seed", verify_seed, "simulation seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);  // --help / --version
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*c_expand) {
      const BetaSpec b = b_expand.build();
      out << join_digits(beta_expand(Real(expand_x), b, expand_n)) << "\n";
      return 0;
    }

    if (*c_eps1) {
      const BetaSpec b = b_eps1.build();
      if (eps1_json) {
        json j;
        j["beta"] = b.value().str(32);
        const SimpleInfo s = b.simpleness();
        j["simple"] = s.kind == Simpleness::Simple ? "yes" : (s.kind == Simpleness::NotSimple ? "no" : "unknown-at-depth");
        if (s.length) j["M"] = *s.length;
        j["digits"] = join_digits(expansion_of_one(b.value(), eps1_n));
        const DigitsOut q = quasi_expansion(b, eps1_n);
        j["quasi"] = join_digits(q.digits);
        j["quasi_truncated"] = q.truncated;
        if (eps1_runs) {
          const DigitsOut runs = zero_run_lengths(b, eps1_n);
          j["zero_runs"] = runs.digits;
          j["zero_runs_truncated"] = runs.truncated;
        }
        out << j.dump() << "\n";
      } else if (eps1_runs) {
        const DigitsOut runs = zero_run_lengths(b, eps1_n);
        out << "n,run\n";
        for (std::size_t i = 0; i < runs.digits.size(); ++i) out << (i + 1) << "," << runs.digits[i] << "\n";
        if (runs.truncated) err << "warning: runs truncated at the numeric depth\n";
      } else if (eps1_quasi) {
        const DigitsOut q = quasi_expansion(b, eps1_n);
        out << join_digits(q.digits) << "\n";
        if (q.truncated) err << "warning: quasi-expansion truncated at the numeric depth\n";
      } else {
        out << join_digits(expansion_of_one(b.value(), eps1_n)) << "\n";
      }
      return 0;
    }

    if (*c_adm) {
      const BetaSpec b = b_adm.build();
      out << (is_admissible(b, adm_word) ? "true" : "false") << "\n";
      return 0;
    }

    if (*c_full) {
      const BetaSpec b = b_full.build();
      if (full_json) {
        out << word_report(b, full_word).dump() << "\n";
      } else {
        out << (Word(b, full_word).full() ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (*c_enum) {
      const BetaSpec b = b_enum.build();
      if (enum_count) {
        const std::vector<std::uint64_t> counts = count_admissible(b, enum_n, enum_full, 2 * enum_guard);
        out << "n,count\n";
        for (int n = 1; n <= enum_n; ++n) out << n << "," << counts[static_cast<std::size_t>(n - 1)] << "\n";
      } else {
        const std::vector<std::string> words = enumerate_admissible(b, enum_n, enum_full, enum_guard);
        if (enum_json) {
          out << json(words).dump() << "\n";
        } else {
          for (const std::string& w : words) out << w << "\n";
        }
      }
      return 0;
    }

    if (*c_cyl) {
      const BetaSpec b = b_cyl.build();
      const Word w(b, cyl_word);
      const CylinderInterval iv = cylinder_interval(w);
      json j;
      j["word"] = cyl_word;
      j["left"] = iv.left;
      j["length"] = iv.length;
      j["order"] = iv.order;
      j["full"] = w.full();
      j["parry_state"] = w.parry_state();
      out << j.dump() << "\n";
      return 0;
    }

    if (*c_meas || *c_shift) {
      const BetaSpec b = *c_meas ? b_meas.build() : b_shift.build();
      const Prob p = parse_probability(*c_meas ? meas_p : shift_p);
      require_open_unit(p.d, "p");
      if (*c_meas && meas_qb) {
        json j;
        if (p.exact) {
          const auto rep = quasi_bernoulli_report(b, meas_maxlen, p.r);
          j = {{"min_ratio", format_rational(rep.min_ratio)},
               {"max_ratio", format_rational(rep.max_ratio)},
               {"witness_pair", {rep.witness_w, rep.witness_v}},
               {"bound", rep.bound ? format_rational(*rep.bound) : "n/a"},
               {"holds", rep.holds},
               {"pairs", rep.pairs}};
        } else {
          const auto rep = quasi_bernoulli_report(b, meas_maxlen, p.d);
          j = {{"min_ratio", rep.min_ratio},
               {"max_ratio", rep.max_ratio},
               {"witness_pair", {rep.witness_w, rep.witness_v}},
               {"bound", rep.bound ? json(*rep.bound) : json("n/a")},
               {"holds", rep.holds},
               {"pairs", rep.pairs}};
        }
        out << j.dump() << "\n";
        return 0;
      }
      if (*c_meas && meas_sqi) {
        json j;
        if (p.exact) {
          const auto rep = strong_quasi_invariance_report(b, meas_maxshift, meas_maxlen, p.r);
          j = {{"min_ratio", format_rational(rep.min_ratio)},
               {"max_ratio", format_rational(rep.max_ratio)},
               {"witness", rep.witness_word},
               {"witness_shift", rep.witness_shift},
               {"applicable", rep.applicable},
               {"holds", rep.holds}};
        } else {
          const auto rep = strong_quasi_invariance_report(b, meas_maxshift, meas_maxlen, p.d);
          j = {{"min_ratio", rep.min_ratio},
               {"max_ratio", rep.max_ratio},
               {"witness", rep.witness_word},
               {"witness_shift", rep.witness_shift},
               {"applicable", rep.applicable},
               {"holds", rep.holds}};
        }
        out << j.dump() << "\n";
        return 0;
      }
      const std::string word_text = *c_meas ? meas_word : shift_word;
      if (word_text.empty()) throw DomainError("--word is required");
      const long k = *c_meas ? meas_shift : shift_k;
      const long guard = *c_meas ? meas_guard : shift_guard;
      const Word w(b, word_text);
      if (p.exact) {
        const Rational v = k == 0 ? mu_cylinder(w, p.r) : shifted_mu(b, w, k, p.r, guard);
        out << format_rational(v) << "\n";
      } else {
        const double v = k == 0 ? mu_cylinder(w, p.d) : shifted_mu(b, w, k, p.d, guard);
        out << format_double(v) << "\n";
      }
      return 0;
    }

    if (*c_mp) {
      const BetaSpec b = b_mp.build();
      const Prob p = parse_probability(mp_p);
      require_open_unit(p.d, "p");
      const Word target(b, mp_target);
      if (mp_closed_only) {
        if (b_mp.family == "10m1") {
          out << (p.exact ? format_rational(mp_zero_interval(p.r, b_mp.m))
                          : format_double(mp_zero_interval(p.d, b_mp.m)))
              << "\n";
        } else if (b_mp.family == "ones") {
          if (p.exact) {
            const auto [zero, top] = mp_pseudo_golden(p.r, b_mp.m);
            out << format_rational(zero) << "," << format_rational(top) << "\n";
          } else {
            const auto [zero, top] = mp_pseudo_golden(p.d, b_mp.m);
            out << format_double(zero) << "," << format_double(top) << "\n";
          }
        } else {
          throw DomainError("--closed-form-only needs --family 10m1 or --family ones");
        }
        return 0;
      }
      if (b.simpleness().kind != Simpleness::Simple && mp_method == "dp" &&
          mp_K + static_cast<long>(target.size()) > 200) {
        throw DomainError("the exact recursion needs bounded follower states; use --method mc for "
                          "non-simple bases at large K");
      }
      out << "K,estimate,half_width\n";
      if (mp_method == "mc") {
        const McCesaro r = mc_cesaro(b, p.d, target.digits(), mp_K, mp_streams, seed_or_env(mp_seed));
        out << r.iterations << "," << format_double(r.value) << "," << format_double(r.half_width) << "\n";
        if (r.hypothesis_violation) err << "warning: base is not simple; the ergodic limit theorem does not apply\n";
      } else if (mp_method == "dp") {
        // rational denominators grow like den(p)^K, so automatic exact mode
        // stays tractable only for moderate K
        if (p.exact && mp_K > 2000) {
          err << "note: K > 2000, evaluating the recursion in floating point\n";
        }
        if (p.exact && mp_K <= 2000) {
          const auto r = cesaro_mp(b, target, mp_K, p.r);
          out << r.iterations << "," << format_double(to_double(r.value)) << ",0\n";
          if (r.hypothesis_violation) err << "warning: base is not simple; the ergodic limit theorem does not apply\n";
        } else {
          const auto r = cesaro_mp(b, target, mp_K, p.d);
          out << r.iterations << "," << format_double(r.value) << ",0\n";
          if (r.hypothesis_violation) err << "warning: base is not simple; the ergodic limit theorem does not apply\n";
        }
      } else {
        throw DomainError("unknown method '" + mp_method + "' (dp|mc)");
      }
      if (mp_closed) {
        if (b_mp.family == "10m1") {
          if (p.exact) {
            err << "closed form: " << format_rational(mp_zero_interval(p.r, b_mp.m)) << "\n";
          } else {
            err << "closed form: " << format_double(mp_zero_interval(p.d, b_mp.m)) << "\n";
          }
        } else if (b_mp.family == "ones") {
          if (p.exact) {
            const auto [zero, top] = mp_pseudo_golden(p.r, b_mp.m);
            err << "closed form: zero " << format_rational(zero) << ", top " << format_rational(top) << "\n";
          } else {
            const auto [zero, top] = mp_pseudo_golden(p.d, b_mp.m);
            err << "closed form: zero " << format_double(zero) << ", top " << format_double(top) << "\n";
          }
        } else {
          err << "closed form needs --family 10m1 or --family ones\n";
        }
      }
      return 0;
    }

    if (*c_dim) {
      if (dim_upper || dim_tails) {
        const BetaSpec b = b_dim.build();
        if (dim_grid.empty() && dim_p.empty()) throw DomainError("--p or --p-grid required");
        if (!dim_grid.empty()) {
          const GridSpec g = GridSpec::parse(dim_grid);
          out << (dim_upper ? "p,upper_bound,exceeds_one\n" : "p,low_set_bound,high_set_bound\n");
          for (int i = 0; i < g.n; ++i) {
            const double p = g.at(i);
            if (dim_upper) {
              const UpperBound ub = dim_upper_bound(p, b.value_d());
              out << format_double(p) << "," << format_double(ub.value) << "," << (ub.exceeds_one ? 1 : 0) << "\n";
            } else {
              const auto [lo, hi] = dim_tail_bounds(p, b.value_d());
              out << format_double(p) << "," << format_double(lo) << "," << format_double(hi) << "\n";
            }
          }
          return 0;
        }
        const double p = parse_probability(dim_p).d;
        json j;
        if (dim_upper) {
          const UpperBound ub = dim_upper_bound(p, b.value_d());
          j = {{"p", p}, {"upper_bound", ub.value}, {"exceeds_one", ub.exceeds_one}};
        } else {
          const auto [lo, hi] = dim_tail_bounds(p, b.value_d());
          j = {{"p", p}, {"low_set_bound", lo}, {"high_set_bound", hi}};
        }
        out << j.dump() << "\n";
        return 0;
      }
      if (b_dim.family != "10m1" || b_dim.m < 0) {
        throw DomainError("level-set dimension needs --family 10m1 --m <k>");
      }
      if (!dim_grid.empty()) {
        const GridSpec g = GridSpec::parse(dim_grid);
        out << "p,q,dim,entropy\n";
        for (int i = 0; i < g.n; ++i) {
          const DimReport rep = dim_level_set(g.at(i), b_dim.m);
          out << format_double(rep.p) << "," << format_double(rep.q) << "," << format_double(rep.dim)
              << "," << format_double(rep.entropy) << "\n";
        }
        return 0;
      }
      if (dim_p.empty()) throw DomainError("--p or --p-grid required");
      const DimReport rep = dim_level_set(parse_probability(dim_p).d, b_dim.m);
      json j = {{"p", rep.p}, {"q", rep.q}, {"dim", rep.dim}, {"entropy", rep.entropy}};
      out << j.dump() << "\n";
      return 0;
    }

    if (*c_markov) {
      const BetaSpec b = b_markov.build();
      const Prob p = parse_probability(markov_p);
      require_open_unit(p.d, "p");
      json j;
      if (p.exact) {
        const MarkovMeasure<Rational> mm = markov_from_mu(b, p.r);
        j["order"] = mm.order;
        j["states"] = mm.states;
        json pi = json::array(), trans = json::array();
        for (const Rational& v : mm.pi) pi.push_back(format_rational(v));
        for (const auto& row : mm.trans) {
          json r = json::array();
          for (const Rational& v : row) r.push_back(format_rational(v));
          trans.push_back(r);
        }
        j["pi"] = pi;
        j["trans"] = trans;
        j["zero_mass"] = format_rational(markov_zero_mass(mm));
        j["entropy"] = markov_entropy(mm);
      } else {
        const MarkovMeasure<double> mm = markov_from_mu(b, p.d);
        j["order"] = mm.order;
        j["states"] = mm.states;
        j["pi"] = mm.pi;
        j["trans"] = mm.trans;
        j["zero_mass"] = markov_zero_mass(mm);
        j["entropy"] = markov_entropy(mm);
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (*c_gap) {
      if (!gap_grid.empty()) {
        const GridSpec g = GridSpec::parse(gap_grid);
        out << "p,a,b,h_upper,x_star,f_max,gap\n";
        for (int i = 0; i < g.n; ++i) {
          const double p = g.at(i);
          const EntropyGap e = entropy_gap_counter(p);
          out << format_double(p) << "," << format_double(e.a) << "," << format_double(e.b) << ","
              << format_double(e.h_upper) << "," << format_double(e.x_star) << ","
              << format_double(e.f_max) << "," << format_double(e.gap) << "\n";
        }
        return 0;
      }
      if (gap_p.empty()) throw DomainError("--p or --p-grid required");
      const EntropyGap e = entropy_gap_counter(parse_probability(gap_p).d);
      json j = {{"p", parse_probability(gap_p).d}, {"a", e.a},       {"b", e.b},
                {"h_upper", e.h_upper},            {"x_star", e.x_star}, {"f_max", e.f_max},
                {"gap", e.gap}};
      out << j.dump() << "\n";
      return 0;
    }

    if (*c_sim) {
      const BetaSpec b = b_sim.build();
      const std::uint64_t seed = seed_or_env(sim_seed);
      if (sim_law == "walk") {
        const double p = parse_probability(sim_p).d;
        require_open_unit(p, "p");
        if (sim_emit) {
          const std::vector<std::uint8_t> digits = walk_sample(b, p, sim_n, seed, 0);
          for (std::uint8_t d : digits) out << char('0' + d);
          out << "\n";
          return 0;
        }
        // zero frequency across walk streams
        double mean = 0.0;
        for (long t = 0; t < sim_streams; ++t) {
          const std::vector<std::uint8_t> digits = walk_sample(b, p, sim_n, seed, static_cast<std::uint64_t>(t));
          long zeros = 0;
          for (std::uint8_t d : digits) zeros += d == 0;
          mean += static_cast<double>(zeros) / static_cast<double>(sim_n);
        }
        json j = {{"law", "walk"}, {"p", p}, {"n", sim_n}, {"streams", sim_streams},
                  {"zero_frequency", mean / static_cast<double>(sim_streams)}};
        out << j.dump() << "\n";
        return 0;
      }
      if (sim_law != "markov") throw DomainError("unknown law '" + sim_law + "' (walk|markov)");
      const double q = parse_probability(sim_q.empty() ? sim_p : sim_q).d;
      require_open_unit(q, "q");
      const MarkovMeasure<double> mm = markov_from_mu(b, q);
      if (sim_emit) {
        const std::vector<std::uint8_t> digits = markov_sample(mm, sim_n, seed, 0);
        for (std::uint8_t d : digits) out << char('0' + d);
        out << "\n";
        return 0;
      }
      const FreqReport rep = frequency_simulation(mm, sim_n, sim_streams, seed);
      json j = {{"law", "markov"},  {"q", q},
                {"n", rep.n},       {"streams", rep.streams},
                {"zero_frequency", rep.mean}, {"stderr", rep.stderr_},
                {"predicted", rep.predicted}, {"sigmas", rep.sigmas}};
      out << j.dump() << "\n";
      return 0;
    }

    if (*c_loc) {
      const BetaSpec b = b_loc.build();
      const double p = parse_probability(loc_p).d;
      require_open_unit(p, "p");
      std::vector<long> depths;
      {
        std::istringstream is(loc_depths);
        std::string tok;
        while (std::getline(is, tok, ',')) depths.push_back(std::stol(tok));
        if (depths.empty()) throw DomainError("--depths is empty");
      }
      long n = loc_n;
      for (long d : depths) n = std::max(n, d);
      const std::uint64_t seed = seed_or_env(loc_seed);
      std::vector<std::uint8_t> stream;
      if (loc_law == "walk") {
        stream = walk_sample(b, parse_probability(loc_q.empty() ? loc_p : loc_q).d, n, seed, 0);
      } else if (loc_law == "markov") {
        const double q = parse_probability(loc_q.empty() ? loc_p : loc_q).d;
        stream = markov_sample(markov_from_mu(b, q), n, seed, 0);
      } else {
        throw DomainError("unknown law '" + loc_law + "' (walk|markov)");
      }
      const std::vector<double> ratios = local_dim_estimate(b, stream, p, depths);
      out << "n,ratio\n";
      for (std::size_t i = 0; i < depths.size(); ++i) {
        out << depths[i] << "," << format_double(ratios[i]) << "\n";
      }
      return 0;
    }

    if (*c_verify) {
      vopt.seed = seed_or_env(verify_seed);
      if (vopt.deep) {
        vopt.brute_force_len = 16;
        vopt.mc_length = 1000000;
        vopt.mc_streams = 16;
      }
      return run_verify(verify_suite(suite_name.empty() ? "all" : suite_name, vopt), out);
    }
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << " (reliable prefix: " << e.reliable_prefix() << ")\n";
    return 3;
  } catch (const GuardError& e) {
    err << "guard error: " << e.what() << "\n";
    return 3;
  } catch (const UndecidedError& e) {
    err << "undecided: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace betashift
