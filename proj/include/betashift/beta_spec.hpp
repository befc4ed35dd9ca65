#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betashift/automaton.hpp"
#include "betashift/digit_tail.hpp"
#include "betashift/numeric.hpp"

namespace betashift {

enum class BetaMode { Symbolic, Numeric };

enum class Simpleness { Simple, NotSimple, Unknown };

struct SimpleInfo {
  Simpleness kind;
  std::optional<int> length;  // M when kind == Simple
};

struct DigitsOut {
  std::vector<int> digits;
  bool truncated = false;  // numeric mode ran out of reliable depth
};

// A base beta > 1 together with the expansion of 1 and its quasi form.
//
// Symbolic mode: the digit tail is ground truth and beta is the root of
// sum eps_j beta^{-j} = 1.  Numeric mode: beta is ground truth and digits
// are greedy to the truncation depth.  Instances are immutable after
// construction and safe to share across threads.
class BetaSpec {
 public:
  static constexpr int kDefaultDepth = 64;

  // Solves beta from a declared expansion of 1 (binary digits, base in
  // (1,2]).  Throws InvalidExpansionError / DomainError.
  static BetaSpec from_expansion(const DigitTail& tail);
  static BetaSpec from_expansion(const std::string& tail_text);

  // Greedy digits of 1 for a numeric base, carried to `depth`.
  static BetaSpec from_value(const Real& beta, int depth = kDefaultDepth);

  // The two studied families: expansion of 1 equal to 1 0^m 1 (m >= 0)
  // and 1^m (m >= 2).
  static BetaSpec family_10m1(int m);
  static BetaSpec family_ones(int m);

  BetaMode mode() const { return mode_; }
  const Real& value() const { return value_; }
  double value_d() const { return value_d_; }
  double log_beta() const { return log_beta_; }
  const DigitTail& expansion1() const { return expansion1_; }
  const DigitTail& quasi() const { return quasi_; }
  std::optional<int> finite_length() const { return finite_length_; }
  int depth() const { return depth_; }
  bool truncated() const { return truncated_; }

  SimpleInfo simpleness() const;

  // eps_j(1,beta), 1-based.  Throws UndecidedError past the reliable depth.
  int eps(std::size_t j) const;
  int eps_star(std::size_t j) const;

  // How many digits of eps are certain (SIZE_MAX when unbounded).
  std::size_t eps_known() const;

  bool binary() const { return value_d_ <= 2.0 + 1e-12; }

  const ParryAutomaton& automaton() const;

  // y_s = T_beta^s(1), the relative length of a state-s cylinder.
  double y(int state) const;
  const Real& y_r(int state) const;

  double pow_minus(int n) const;  // beta^{-n}
  Real pow_minus_r(int n) const;

  std::string describe() const;

 private:
  BetaSpec() = default;
  void finish_setup();

  BetaMode mode_ = BetaMode::Symbolic;
  Real value_;
  double value_d_ = 0.0;
  double log_beta_ = 0.0;
  DigitTail expansion1_;
  DigitTail quasi_;
  std::optional<int> finite_length_;
  int depth_ = kDefaultDepth;
  bool truncated_ = false;

  std::shared_ptr<const ParryAutomaton> automaton_;  // binary bases only
  std::vector<Real> y_r_;
  std::vector<double> y_d_;
};

// ---- beta_core operations on raw values ----

// Greedy digits of 1 under T_beta.  Integer bases use the (beta-1)^inf
// convention.  Throws PrecisionError when the orbit enters the ambiguous
// band around an integer boundary.
std::vector<int> expansion_of_one(const Real& beta, int n);

DigitsOut quasi_expansion(const BetaSpec& b, int n);

// Greedy digits of x in [0,1).
std::vector<int> beta_expand(const Real& x, const BetaSpec& b, int n);

// l_k: zero run lengths after each position of the quasi-expansion,
// k = 1..n.  Evidence for boundedness, never a proof.
DigitsOut zero_run_lengths(const BetaSpec& b, int n);

}  // namespace betashift
