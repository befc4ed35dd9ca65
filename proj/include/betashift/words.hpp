#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "betashift/beta_spec.hpp"

namespace betashift {

inline constexpr int kDefaultGuard = 32;

// An admissible binary word with its cached follower state and the
// digit-frequency counters:
//   n0 = free zeros (positions where a 1 would also have been admissible),
//   n1 = number of ones.
class Word {
 public:
  Word(const BetaSpec& b, std::string_view digits01);
  Word(const BetaSpec& b, const std::vector<std::uint8_t>& digits);

  const BetaSpec& beta() const { return *beta_; }
  std::size_t size() const { return digits_.size(); }
  int digit(std::size_t i) const { return digits_[i]; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  int parry_state() const { return state_; }
  bool full() const { return state_ == 0; }
  long n0() const { return n0_; }
  long n1() const { return n1_; }

  std::string str() const;

 private:
  const BetaSpec* beta_;
  std::vector<std::uint8_t> digits_;
  int state_ = 0;
  long n0_ = 0;
  long n1_ = 0;
};

// Non-throwing admissibility check (still throws UndecidedError when the
// comparison cannot be decided at the numeric depth).
bool is_admissible(const BetaSpec& b, std::string_view digits01);

// First index where the zero-padded word drops below the quasi-expansion.
long m_index(const Word& w);

// Shortest full prefix length of w 0^inf (min{m_index, M} for simple bases)
// and the longest full prefix length within w.
long tau(const Word& w);
long tau_prime(const Word& w);

struct CylinderInterval {
  double left;
  double length;
  int order;
};

// Documented bound, not computed here: a ball of radius beta^{-n} meets
// O(n) cylinders of order n (linear in n; the sharp constant is not
// relied on anywhere in this library).

// I(w) = [sum w_j beta^{-j}, +beta^{-n} T^s(1)) with s the follower state.
CylinderInterval cylinder_interval(const Word& w);

// Lightweight view passed to exhaustive scans.
struct WordView {
  const std::uint8_t* digits;
  int length;
  int state;
  long n0;
  long n1;

  std::string str() const {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i) s[static_cast<std::size_t>(i)] = char('0' + digits[i]);
    return s;
  }
};

// Depth-first traversal of every admissible word of length 1..n in
// lexicographic order (digit 0 before digit 1).
void for_each_admissible(const BetaSpec& b, int n,
                         const std::function<void(const WordView&)>& fn);

// The words of length exactly n (or its full subset), lexicographic.
// Guard: n <= guard.
std::vector<std::string> enumerate_admissible(const BetaSpec& b, int n, bool full_only,
                                              int guard = kDefaultGuard);

// Word counts per length 1..n via the follower-state recursion.
std::vector<std::uint64_t> count_admissible(const BetaSpec& b, int n, bool full_only = false,
                                            int guard = 2 * kDefaultGuard);

}  // namespace betashift
