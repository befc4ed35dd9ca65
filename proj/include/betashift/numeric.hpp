#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

#include "betashift/errors.hpp"

namespace betashift {

// Orbit arithmetic carries ~166 significand bits; expansions stay reliable
// far past the depths any operation here requests.
using Real = boost::multiprecision::cpp_bin_float_50;

// Exact mode for measure identities.
using Rational = boost::multiprecision::cpp_rational;

template <class S>
S ipow(const S& base, long e) {
  if (e == 0) return S(1);
  if (e < 0) return S(1) / ipow(base, -e);
  S acc(1);
  S b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline double to_double(const Real& x) { return static_cast<double>(x); }
inline double to_double(const Rational& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

// A probability parsed from text.  "a/b" selects exact rational mode,
// a decimal literal selects floating mode.
struct Prob {
  bool exact = false;
  Rational r;
  double d = 0.0;

  static Prob rational(const Rational& v) {
    Prob p;
    p.exact = true;
    p.r = v;
    p.d = to_double(v);
    return p;
  }
  static Prob floating(double v) {
    Prob p;
    p.exact = false;
    p.d = v;
    return p;
  }
};

Prob parse_probability(const std::string& text);

// (0,1) open-interval check shared by the measure constructors.
template <class S>
void require_open_unit(const S& p, const char* what) {
  if (!(p > S(0) && p < S(1))) {
    throw DomainError(std::string(what) + " must lie strictly between 0 and 1");
  }
}

std::string format_rational(const Rational& q);

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace betashift
