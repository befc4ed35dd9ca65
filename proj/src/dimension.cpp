#include "betashift/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "betashift/words.hpp"

namespace betashift {

namespace {

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double family_log_beta(int m) {
  static thread_local int cached_m = -1;
  static thread_local double cached = 0.0;
  if (cached_m != m) {
    cached = BetaSpec::family_10m1(m).log_beta();
    cached_m = m;
  }
  return cached;
}

}  // namespace

double q_of_p(double p, int m) {
  const double denom = m * p - m + p;
  return (m * p - m + 2 * p - 1) / denom;
}

DimReport dim_level_set(double p, int m) {
  if (m < 0) throw DomainError("family index m must be >= 0");
  if (p < 0.0 || p > 1.0) throw DomainError("frequency p must lie in [0,1]");
  DimReport rep;
  rep.p = p;
  const double threshold = double(m + 1) / double(m + 2);
  if (p <= threshold || p >= 1.0) {
    // empty level sets below the attainable frequency; zero dimension at
    // both endpoints
    rep.q = p < threshold ? 0.0 : q_of_p(p, m);
    if (p >= 1.0) rep.q = 1.0;
    if (p <= threshold) rep.q = 0.0;
    rep.dim = 0.0;
    rep.entropy = 0.0;
    return rep;
  }
  const double A = m * p - m + p;        // = (1-p) + (frequency of free zeros)
  const double B = m * p - m + 2 * p - 1;
  rep.q = B / A;
  rep.entropy = xlogx(A) - xlogx(B) - xlogx(1.0 - p);
  if (rep.entropy < 0.0) rep.entropy = 0.0;
  rep.dim = rep.entropy / family_log_beta(m);
  return rep;
}

UpperBound dim_upper_bound(double p, double beta) {
  if (p < 0.0 || p > 1.0) throw DomainError("frequency p must lie in [0,1]");
  if (!(beta > 1.0)) throw DomainError("base must exceed 1");
  const double v = (-xlogx(p) - xlogx(1.0 - p)) / std::log(beta);
  return UpperBound{v, v > 1.0};
}

std::pair<double, double> dim_tail_bounds(double p, double beta) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie strictly between 0 and 1");
  if (!(beta > 1.0)) throw DomainError("base must exceed 1");
  const double lb = std::log(beta);
  const double low_set = (-p * std::log(p) - std::log(1.0 - p)) / lb;
  const double high_set = (-std::log(p) - (1.0 - p) * std::log(1.0 - p)) / lb;
  return {low_set, high_set};
}

std::vector<double> local_dim_estimate(const BetaSpec& b, const std::vector<std::uint8_t>& stream,
                                       double p, const std::vector<long>& depths) {
  require_open_unit(p, "p");
  const ParryAutomaton& a = b.automaton();
  const double logp = std::log(p);
  const double logq = std::log(1.0 - p);
  const double logbeta = b.log_beta();

  std::vector<long> sorted(depths);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out(depths.size());

  long n0 = 0, n1 = 0;
  int s = 0;
  std::size_t next_depth = 0;
  for (long i = 0; i < static_cast<long>(stream.size()) && next_depth < sorted.size(); ++i) {
    const bool one_ok = a.one_allowed(s);
    if (stream[static_cast<std::size_t>(i)] == 1) {
      if (!one_ok) throw DomainError("stream is inadmissible at position " + std::to_string(i + 1));
      ++n1;
    } else if (one_ok) {
      ++n0;
    }
    s = a.next(s, stream[static_cast<std::size_t>(i)]);
    while (next_depth < sorted.size() && sorted[next_depth] == i + 1) {
      const double log_mu = n0 * logp + n1 * logq;
      const double log_len = -(i + 1) * logbeta + std::log(b.y(s));
      out[next_depth] = log_mu / log_len;
      ++next_depth;
    }
  }
  if (next_depth < sorted.size()) throw DomainError("stream shorter than the requested depth");

  // restore the caller's depth order
  std::vector<double> result(depths.size());
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), depths[i]);
    result[i] = out[static_cast<std::size_t>(it - sorted.begin())];
  }
  return result;
}

double entropy_gap_objective(double a, double x) {
  return xlogx(a) - xlogx(a - x) - xlogx(1.0 - a - x) - xlogx(2.0 * x + a - 1.0);
}

EntropyGap entropy_gap_counter(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie strictly between 0 and 1");
  const double u = 1.0 - p;
  const double denom = 1.0 - u * u * u;
  EntropyGap g;
  g.a = p / denom;
  const double top = p * u * u / denom;  // limit mass of the 11 cylinder
  g.b = (1.0 - g.a) - top;

  const double lo = (1.0 - g.a) / 2.0;
  const double hi = std::min(g.a, 1.0 - g.a);
  if (!(g.b >= lo - 1e-12 && g.b <= hi + 1e-12)) {
    throw DomainError("internal consistency: b escaped its admissible bracket");
  }

  const double disc = -8.0 * g.a * g.a + 12.0 * g.a - 3.0;
  g.x_star = (3.0 - 4.0 * g.a + std::sqrt(disc)) / 6.0;
  g.h_upper = entropy_gap_objective(g.a, g.b);
  g.f_max = entropy_gap_objective(g.a, g.x_star);
  g.gap = g.f_max - g.h_upper;
  return g;
}

}  // namespace betashift
