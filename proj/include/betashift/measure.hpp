#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betashift/numeric.hpp"
#include "betashift/words.hpp"

namespace betashift {

// ---- random-walk cylinder measure mu_p ----
//
// mu_p[w] = p^{n0(w)} (1-p)^{n1(w)}: the walk appends 0 with probability p
// where a 1 is admissible and is forced to 0 otherwise.  Everything below
// is templated on the scalar so that rational p gives exact identities.

template <class S>
S mu_cylinder(const Word& w, const S& p) {
  return ipow(p, w.n0()) * ipow(S(1) - p, w.n1());
}

// mu_p of a continuation scanned from a given follower state; 0 when the
// continuation is inadmissible from that state.
template <class S>
S conditional_mu(const BetaSpec& b, int from_state, const std::uint8_t* digits, std::size_t len,
                 const S& p) {
  const ParryAutomaton& a = b.automaton();
  const S q = S(1) - p;
  S acc(1);
  int s = from_state;
  for (std::size_t i = 0; i < len; ++i) {
    const bool one_ok = a.one_allowed(s);
    if (digits[i] == 0) {
      if (one_ok) acc *= p;
    } else {
      if (!one_ok) return S(0);
      acc *= q;
    }
    s = a.next(s, digits[i]);
  }
  return acc;
}

// Distribution of the walk's follower state after k steps, advanced one
// shift at a time.  The walk is Markov in the follower state, which is what
// makes sigma^k mu_p exactly summable without enumerating prefixes.
template <class S>
class WalkStateDist {
 public:
  WalkStateDist(const BetaSpec& b, const S& p) : b_(&b), p_(p), q_(S(1) - p), v_(1, S(1)) {}

  void step() {
    const ParryAutomaton& a = b_->automaton();
    std::vector<S> w(std::min<std::size_t>(v_.size() + 1, static_cast<std::size_t>(a.states())),
                     S(0));
    for (std::size_t s = 0; s < v_.size(); ++s) {
      if (v_[s] == S(0)) continue;
      const int si = static_cast<int>(s);
      if (a.one_allowed(si)) {
        at(w, a.next(si, 0)) += v_[s] * p_;
        at(w, a.next(si, 1)) += v_[s] * q_;
      } else {
        at(w, a.next(si, 0)) += v_[s];
      }
    }
    v_ = std::move(w);
  }

  // sum over prefixes u of length k of mu_p[u] * cond(state(u)).
  S dot(const std::vector<S>& cond) const {
    S acc(0);
    for (std::size_t s = 0; s < v_.size(); ++s) {
      if (s < cond.size()) acc += v_[s] * cond[s];
    }
    return acc;
  }

  const std::vector<S>& mass() const { return v_; }

 private:
  static S& at(std::vector<S>& w, int s) {
    if (static_cast<std::size_t>(s) >= w.size()) w.resize(static_cast<std::size_t>(s) + 1, S(0));
    return w[static_cast<std::size_t>(s)];
  }

  const BetaSpec* b_;
  S p_, q_;
  std::vector<S> v_;
};

// Conditionals from states 0..max_state only: a prefix of length k never
// leaves the walk in a state above k, and scanning from deeper states can
// outrun the truncation depth of a non-simple automaton.
template <class S>
std::vector<S> conditional_mu_by_state(const BetaSpec& b, const Word& w, const S& p,
                                       long max_state = -1) {
  long n = b.automaton().states();
  if (max_state >= 0) n = std::min(n, max_state + 1);
  std::vector<S> cond(static_cast<std::size_t>(n));
  for (long s = 0; s < n; ++s) {
    cond[static_cast<std::size_t>(s)] =
        conditional_mu(b, static_cast<int>(s), w.digits().data(), w.size(), p);
  }
  return cond;
}

// sigma^k mu_p[w] = sum over admissible k-prefixes u with uw admissible of
// mu_p[uw].  Exact for rational p.  The documented size guard applies to
// this operation surface; pass a larger guard explicitly for deep shifts.
template <class S>
S shifted_mu(const BetaSpec& b, const Word& w, long k, const S& p, long guard = kDefaultGuard) {
  if (k < 0) throw DomainError("shift count must be nonnegative");
  if (k + static_cast<long>(w.size()) > guard) {
    throw GuardError("shift + word length exceeds the size guard (" + std::to_string(guard) + ")");
  }
  const std::vector<S> cond = conditional_mu_by_state(b, w, p, k);
  WalkStateDist<S> dist(b, p);
  for (long i = 0; i < k; ++i) dist.step();
  return dist.dot(cond);
}

template <class S>
struct Cesaro {
  S value;
  long iterations;
  bool hypothesis_violation;  // base not simple: the ergodic limit theorem does not apply
};

// (1/K) sum_{k=start}^{start+K-1} sigma^k mu_p[target].  Follower-state
// recursion, so exact mode works for any K on simple bases.
template <class S>
Cesaro<S> cesaro_mp(const BetaSpec& b, const Word& target, long K, const S& p, long start = 0) {
  if (K < 1) throw DomainError("cesaro iteration count must be >= 1");
  const std::vector<S> cond = conditional_mu_by_state(b, target, p, start + K - 1);
  WalkStateDist<S> dist(b, p);
  for (long i = 0; i < start; ++i) dist.step();
  S acc(0);
  for (long k = 0; k < K; ++k) {
    acc += dist.dot(cond);
    if (k + 1 < K) dist.step();
  }
  const bool violation = b.simpleness().kind != Simpleness::Simple;
  return Cesaro<S>{acc / S(K), K, violation};
}

// ---- closed forms for m_p on the two families ----

// ergodic mean of the zero cylinder [0, 1/beta) for the family with
// expansion of 1 equal to 1 0^m 1: (m(1-p)+1) / ((m+1)(1-p)+1).
template <class S>
S mp_zero_interval(const S& p, int m) {
  require_open_unit(p, "p");
  if (m < 0) throw DomainError("family index m must be >= 0");
  const S u = S(1) - p;
  return (S(m) * u + S(1)) / (S(m + 1) * u + S(1));
}

// Pseudo-golden family 1^m (m >= 2): means of [0, 1/beta) and of the top
// interval generated by 1^{m-1}.
template <class S>
std::pair<S, S> mp_pseudo_golden(const S& p, int m) {
  require_open_unit(p, "p");
  if (m < 2) throw DomainError("pseudo-golden family needs m >= 2");
  const S u = S(1) - p;
  const S denom = S(1) - ipow(u, m);
  return {p / denom, p * ipow(u, m - 1) / denom};
}

// ---- exhaustive comparability reports ----

template <class S>
struct QuasiBernoulliReport {
  S min_ratio;
  S max_ratio;
  std::string witness_w;  // pair achieving the max ratio
  std::string witness_v;
  std::optional<S> bound;  // p^{-M} for simple bases
  bool holds = false;      // 1 <= ratio <= bound, exact comparison
  bool simple = false;
  long pairs = 0;
};

// Scans every admissible pair (w,v) with |w|,|v| <= max_len and wv
// admissible and reports the range of mu[wv] / (mu[w] mu[v]).  The ratio is
// p^delta with an integer delta = n0(wv)-n0(w)-n0(v), so the scan tracks
// integer exponents and is exact in both scalar modes.
template <class S>
QuasiBernoulliReport<S> quasi_bernoulli_report(const BetaSpec& b, int max_len, const S& p);

template <class S>
struct ShiftComparabilityReport {
  S min_ratio;
  S max_ratio;
  std::string witness_word;
  long witness_shift = 0;
  std::optional<S> lower_bound;  // p^M
  std::optional<S> upper_bound;  // p^{-M}
  bool holds = false;
  bool applicable = false;  // simple base
  long checked = 0;
};

// sigma^k mu_p[w] / mu_p[w] over all admissible w with |w| <= max_len and
// 0 <= k <= max_shift.
template <class S>
ShiftComparabilityReport<S> strong_quasi_invariance_report(const BetaSpec& b, int max_shift,
                                                           int max_len, const S& p);

// Witness construction for non-simple bases: w_n = eps_2..eps_n, whose
// one-step shift ratio grows like p^{-N0}.  Returns the max ratio seen and
// the depth achieving it.
template <class S>
std::pair<S, int> nonsimple_shift_blowup(const BetaSpec& b, const S& p, int max_depth);

// ---- implementations ----

namespace detail {

struct ScannedWord {
  std::string digits;
  int state;
  long n0;
};

inline std::vector<ScannedWord> collect_words(const BetaSpec& b, int max_len) {
  std::vector<ScannedWord> out;
  for_each_admissible(b, max_len, [&](const WordView& w) {
    out.push_back(ScannedWord{w.str(), w.state, w.n0});
  });
  return out;
}

// Free zeros of `digits` scanned from `state`; nullopt when inadmissible.
inline std::optional<long> extra_free_zeros(const BetaSpec& b, int state, const std::string& digits) {
  const ParryAutomaton& a = b.automaton();
  long extra = 0;
  int s = state;
  for (char c : digits) {
    const bool one_ok = a.one_allowed(s);
    if (c == '0') {
      if (one_ok) ++extra;
    } else if (!one_ok) {
      return std::nullopt;
    }
    s = a.next(s, c - '0');
  }
  return extra;
}

}  // namespace detail

template <class S>
QuasiBernoulliReport<S> quasi_bernoulli_report(const BetaSpec& b, int max_len, const S& p) {
  require_open_unit(p, "p");
  const std::vector<detail::ScannedWord> words = detail::collect_words(b, max_len);
  const std::size_t n = words.size();

  // delta = n0(wv) - n0(w) - n0(v) <= 0; ratio = p^delta.
  std::vector<long> delta_min(n, 1), delta_max(n, 1);  // 1 = no admissible pair
  std::vector<std::size_t> argmin(n, 0);
  std::vector<long> pair_count(n, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < n; ++i) {
    const detail::ScannedWord& w = words[i];
    for (std::size_t j = 0; j < n; ++j) {
      const detail::ScannedWord& v = words[j];
      const std::optional<long> extra = detail::extra_free_zeros(b, w.state, v.digits);
      if (!extra) continue;
      const long delta = *extra - v.n0;
      ++pair_count[i];
      if (delta_min[i] == 1 || delta < delta_min[i]) {
        delta_min[i] = delta;
        argmin[i] = j;
      }
      if (delta_max[i] == 1 || delta > delta_max[i]) delta_max[i] = delta;
    }
  }

  QuasiBernoulliReport<S> rep;
  long dmin = 1, dmax = 1;
  std::size_t wi = 0, vi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    rep.pairs += pair_count[i];
    if (pair_count[i] == 0) continue;
    if (dmin == 1 || delta_min[i] < dmin) {
      dmin = delta_min[i];
      wi = i;
      vi = argmin[i];
    }
    if (dmax == 1 || delta_max[i] > dmax) dmax = delta_max[i];
  }
  if (rep.pairs == 0) throw DomainError("no admissible pairs at this length");

  rep.min_ratio = ipow(p, dmax);  // p in (0,1): larger exponent, smaller ratio
  rep.max_ratio = ipow(p, dmin);
  rep.witness_w = words[wi].digits;
  rep.witness_v = words[vi].digits;
  const SimpleInfo info = b.simpleness();
  rep.simple = info.kind == Simpleness::Simple;
  if (rep.simple) {
    const int M = *info.length;
    rep.bound = ipow(p, -long(M));
    rep.holds = dmin >= -long(M) && dmax <= 0;
  }
  return rep;
}

template <class S>
ShiftComparabilityReport<S> strong_quasi_invariance_report(const BetaSpec& b, int max_shift,
                                                           int max_len, const S& p) {
  require_open_unit(p, "p");
  if (max_shift + max_len > 4 * kDefaultGuard) {
    throw GuardError("shift + word length guard exceeded");
  }
  const std::vector<detail::ScannedWord> words = detail::collect_words(b, max_len);

  // State distributions after each shift, shared across words.
  std::vector<WalkStateDist<S>> dists;
  dists.reserve(static_cast<std::size_t>(max_shift) + 1);
  dists.emplace_back(b, p);
  for (int k = 1; k <= max_shift; ++k) {
    dists.push_back(dists.back());
    dists.back().step();
  }

  ShiftComparabilityReport<S> rep;
  bool first = true;
  for (const detail::ScannedWord& sw : words) {
    const Word w(b, sw.digits);
    const std::vector<S> cond = conditional_mu_by_state(b, w, p, max_shift);
    const S base = mu_cylinder(w, p);
    for (int k = 0; k <= max_shift; ++k) {
      const S ratio = dists[static_cast<std::size_t>(k)].dot(cond) / base;
      ++rep.checked;
      if (first || ratio < rep.min_ratio) rep.min_ratio = ratio;
      if (first || ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.witness_word = sw.digits;
        rep.witness_shift = k;
      }
      first = false;
    }
  }

  const SimpleInfo info = b.simpleness();
  rep.applicable = info.kind == Simpleness::Simple;
  if (rep.applicable) {
    const long M = *info.length;
    rep.lower_bound = ipow(p, M);
    rep.upper_bound = ipow(p, -M);
    rep.holds = rep.min_ratio >= *rep.lower_bound && rep.max_ratio <= *rep.upper_bound;
  }
  return rep;
}

template <class S>
std::pair<S, int> nonsimple_shift_blowup(const BetaSpec& b, const S& p, int max_depth) {
  require_open_unit(p, "p");
  S best(0);
  int best_depth = 0;
  for (int n = 2; n <= max_depth; ++n) {
    std::vector<std::uint8_t> digits;
    digits.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = 2; j <= n; ++j) digits.push_back(static_cast<std::uint8_t>(b.eps(static_cast<std::size_t>(j))));
    const Word w(b, digits);
    const S ratio = shifted_mu(b, w, 1, p, /*guard=*/max_depth + 1) / mu_cylinder(w, p);
    if (ratio > best) {
      best = ratio;
      best_depth = n;
    }
  }
  return {best, best_depth};
}

}  // namespace betashift
