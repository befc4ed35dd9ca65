#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "betashift/measure.hpp"

namespace betashift {

// A k-step Markov measure: stationary vector over admissible k-words and a
// stochastic transition matrix between overlapping k-words.  Inadmissible
// k-words are excluded from the state set entirely.
template <class S>
struct MarkovMeasure {
  int order = 1;
  std::vector<std::string> states;        // lexicographic
  std::vector<S> pi;                      // stationary, sums to 1
  std::vector<std::vector<S>> trans;      // rows sum to 1

  int state_index(const std::string& w) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == w) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

// Stationary row vector of a stochastic matrix by elimination: solve
// x (P - I) = 0 with the normalization sum x = 1 replacing one equation.
// Exact over rationals; used for doubles as well since the chains here
// have at most a handful of states.
template <class S>
std::vector<S> stationary_vector(const std::vector<std::vector<S>>& P) {
  const std::size_t n = P.size();
  // Columns of A are the equations; A[i][j] = P[i][j] - delta_ij, last
  // column replaced by all-ones.
  std::vector<std::vector<S>> A(n, std::vector<S>(n, S(0)));
  std::vector<S> rhs(n, S(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) A[i][j] = P[i][j] - (i == j ? S(1) : S(0));
    A[i][n - 1] = S(1);
  }
  rhs[n - 1] = S(1);
  // x A = rhs  <=>  A^T x^T = rhs^T; Gaussian elimination with pivoting.
  std::vector<std::vector<S>> M(n, std::vector<S>(n + 1, S(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) M[r][c] = A[c][r];
    M[r][n] = rhs[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == S(0)) ++piv;
    if (piv == n) throw DomainError("stationary solve: singular system");
    std::swap(M[piv], M[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == S(0)) continue;
      const S f = M[r][col] / M[col][col];
      for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
    }
  }
  std::vector<S> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
  return x;
}

}  // namespace detail

// The (m+1)-step Markov measure whose transition ratios are the mu_p
// conditional ratios, for the family with expansion of 1 equal to 1 0^m 1.
// Its cylinder values reproduce the Cesaro limit of the shifted walk
// measures on every cylinder.
template <class S>
MarkovMeasure<S> markov_from_mu(const BetaSpec& b, const S& p) {
  require_open_unit(p, "p");
  const SimpleInfo info = b.simpleness();
  if (info.kind != Simpleness::Simple) {
    throw DomainError("markov synthesis needs a simple base of the 1 0^m 1 family");
  }
  const int M = *info.length;
  const int m = M - 2;
  // Shape check: eps = 1 0^m 1.
  bool family = m >= 0 && b.eps(1) == 1 && b.eps(static_cast<std::size_t>(M)) == 1;
  for (int j = 2; j < M && family; ++j) family = b.eps(static_cast<std::size_t>(j)) == 0;
  if (!family) throw DomainError("base is not of the 1 0^m 1 family");

  const int k = m + 1;
  MarkovMeasure<S> mm;
  mm.order = k;
  mm.states = enumerate_admissible(b, k, /*full_only=*/false);
  const std::size_t n = mm.states.size();

  const S q = S(1) - p;
  mm.trans.assign(n, std::vector<S>(n, S(0)));
  const ParryAutomaton& a = b.automaton();
  for (std::size_t i = 0; i < n; ++i) {
    const Word u(b, mm.states[i]);
    const int s = u.parry_state();
    for (int d = 0; d <= 1; ++d) {
      if (d == 1 && !a.one_allowed(s)) continue;
      // successor k-word: drop the first digit, append d
      std::string succ = mm.states[i].substr(1) + char('0' + d);
      const int j = mm.state_index(succ);
      if (j < 0) throw DomainError("overlap successor escaped the state set");
      // mu[u d]/mu[u] is exactly the walk step weight
      mm.trans[i][static_cast<std::size_t>(j)] = a.one_allowed(s) ? (d == 0 ? p : q) : S(1);
    }
  }
  mm.pi = detail::stationary_vector(mm.trans);
  return mm;
}

// Cylinder value of the Markov measure: a marginal for short words, the
// stationary-times-transition product for long ones, 0 off the support.
template <class S>
S mm_cylinder(const MarkovMeasure<S>& mm, const std::string& w) {
  const int k = mm.order;
  const int n = static_cast<int>(w.size());
  if (n == 0) return S(1);
  if (n <= k) {
    S acc(0);
    for (std::size_t i = 0; i < mm.states.size(); ++i) {
      if (mm.states[i].compare(0, w.size(), w) == 0) acc += mm.pi[i];
    }
    return acc;
  }
  int cur = mm.state_index(w.substr(0, static_cast<std::size_t>(k)));
  if (cur < 0) return S(0);
  S acc = mm.pi[static_cast<std::size_t>(cur)];
  for (int i = k; i < n; ++i) {
    const int nxt = mm.state_index(w.substr(static_cast<std::size_t>(i - k + 1), static_cast<std::size_t>(k)));
    if (nxt < 0) return S(0);
    acc *= mm.trans[static_cast<std::size_t>(cur)][static_cast<std::size_t>(nxt)];
    cur = nxt;
  }
  return acc;
}

// Entropy rate -sum_u pi_u sum_v t_uv log t_uv with 0 log 0 := 0.
template <class S>
double markov_entropy(const MarkovMeasure<S>& mm) {
  double h = 0.0;
  for (std::size_t i = 0; i < mm.states.size(); ++i) {
    const double w = to_double(mm.pi[i]);
    for (std::size_t j = 0; j < mm.states.size(); ++j) {
      const double t = to_double(mm.trans[i][j]);
      if (t > 0.0) h -= w * t * std::log(t);
    }
  }
  return h < 0.0 ? 0.0 : h;
}

// Zero-digit frequency predicted by the chain: total stationary mass of
// states starting with digit 0.
template <class S>
S markov_zero_mass(const MarkovMeasure<S>& mm) {
  S acc(0);
  for (std::size_t i = 0; i < mm.states.size(); ++i) {
    if (mm.states[i][0] == '0') acc += mm.pi[i];
  }
  return acc;
}

}  // namespace betashift
