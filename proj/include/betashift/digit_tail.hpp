#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace betashift {

// An eventually periodic digit sequence: preperiod then period repeated
// forever.  An empty period means the tail is 0^inf (a finite expansion);
// by convention a finite tail keeps no trailing zeros, so its length is
// the index of the last nonzero digit.
struct DigitTail {
  std::vector<int> preperiod;
  std::vector<int> period;

  bool finite() const { return period.empty(); }

  // 1-based digit access with the periodic (or zero) extension.
  int digit(std::size_t j) const {
    if (j == 0) return 0;
    if (j <= preperiod.size()) return preperiod[j - 1];
    if (period.empty()) return 0;
    return period[(j - preperiod.size() - 1) % period.size()];
  }

  std::size_t preperiod_length() const { return preperiod.size(); }
  std::size_t period_length() const { return period.size(); }

  // Trims trailing zeros of a finite tail and collapses an all-zero period.
  void normalize();

  bool operator==(const DigitTail&) const = default;

  std::string to_string() const;

  // Grammar: whitespace-separated tokens, each one of
  //   "110"      plain digits
  //   "0^3"      run of a digit ("0^inf" marks the zero tail, last token only)
  //   "per(100)" the period (last token only)
  static DigitTail parse(const std::string& text);
};

// Lexicographic comparison of sigma^k(tail) against tail itself, decided
// exactly from the eventually periodic description.  Returns -1/0/+1.
int compare_shifted(const DigitTail& tail, std::size_t k);

}  // namespace betashift
