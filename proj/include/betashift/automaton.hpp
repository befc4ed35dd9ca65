#pragma once

#include <cstdint>
#include <vector>

#include "betashift/errors.hpp"

namespace betashift {

// Follower-state automaton of a binary beta-shift (1 < beta <= 2).
//
// The state of an admissible word is the length of its maximal suffix that
// is a prefix of the expansion of 1.  Appending digit d is admissible
// exactly when d <= eps*_{s+1}; because the quasi-expansion is
// self-admissible, the maximal match dominates every shorter (border)
// match, so one comparison per digit decides the Parry criterion.
//
// For a simple base (expansion of 1 finite with length M) the chain of
// states reduces mod M: a match of length qM + r against the periodized
// quasi-expansion forces a genuine match of length r, and the decremented
// block eps_1..eps_{M-1}(eps_M - 1) is full.  That yields the classical
// M-state presentation; equivalence with the naive Parry scan is covered
// by tests rather than assumed.
//
// For an infinite expansion of 1 the shift is not of finite type; states
// are genuine match lengths capped by a construction depth, and running
// past the depth raises UndecidedError instead of guessing a digit.
class ParryAutomaton {
 public:
  // eps: digits eps_1..eps_M of a finite expansion of 1 (binary).
  static ParryAutomaton simple(const std::vector<int>& eps);

  // eps: a reliable prefix eps_1..eps_depth of an infinite expansion.
  static ParryAutomaton infinite(const std::vector<int>& eps);

  int states() const { return static_cast<int>(one_ok_.size()); }
  bool simple_base() const { return simple_; }

  bool one_allowed(int s) const {
    check_state(s);
    return one_ok_[static_cast<std::size_t>(s)];
  }

  // Successor state; digit 1 requires one_allowed(s).
  int next(int s, int d) const {
    check_state(s);
    return d == 0 ? next0_[static_cast<std::size_t>(s)] : next1_[static_cast<std::size_t>(s)];
  }

  // Full words are exactly the words in state 0.
  static bool full_state(int s) { return s == 0; }

 private:
  void check_state(int s) const {
    if (s < 0 || s >= states()) {
      throw UndecidedError("follower state exceeds the automaton depth; raise the truncation depth");
    }
  }

  bool simple_ = false;
  std::vector<std::uint8_t> one_ok_;
  std::vector<int> next0_;
  std::vector<int> next1_;  // -1 where appending 1 is inadmissible
};

}  // namespace betashift
