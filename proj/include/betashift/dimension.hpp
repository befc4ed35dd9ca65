#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "betashift/beta_spec.hpp"

namespace betashift {

// Closed-form dimension / entropy package for the digit-frequency level
// sets of the 1 0^m 1 family.  Logs are natural throughout; 0 log 0 := 0.

struct DimReport {
  double p = 0.0;
  double q = 0.0;        // auxiliary Bernoulli parameter of the maximizing chain
  double dim = 0.0;      // Hausdorff dimension of the level set
  double entropy = 0.0;  // dim * log beta
};

// q(p) = (mp - m + 2p - 1) / (mp - m + p), the walk bias whose ergodic
// zero-frequency equals p.
double q_of_p(double p, int m);

// Dimension of the set of points with zero-digit frequency p for the
// family 1 0^m 1.  Zero (exactly) below the attainability threshold
// (m+1)/(m+2) and at p = 1.
DimReport dim_level_set(double p, int m);

struct UpperBound {
  double value;
  bool exceeds_one;  // the binary-entropy bound can exceed 1; returned raw
};

// (-p log p - (1-p) log(1-p)) / log beta.
UpperBound dim_upper_bound(double p, double beta);

// One-sided bounds for the level sets with frequency <= p and >= p.
std::pair<double, double> dim_tail_bounds(double p, double beta);

// log mu_p(I_n(x)) / log |I_n(x)| along a digit stream at the requested
// depths.  No limit is taken; callers inspect the trajectory.
std::vector<double> local_dim_estimate(const BetaSpec& b, const std::vector<std::uint8_t>& stream,
                                       double p, const std::vector<long>& depths);

// Entropy-gap package for the base with expansion of 1 equal to 1110^inf:
// the Cesaro-limit chain's entropy upper bound f_a(b) stays strictly below
// the constrained maximum f_a(x_star).
struct EntropyGap {
  double a;       // limit mass of [0, 1/beta)
  double b;       // limit mass of the 01 cylinder
  double h_upper; // f_a(b)
  double x_star;  // closed-form maximizer of f_a
  double f_max;   // f_a(x_star)
  double gap;     // f_max - h_upper, positive for every p in (0,1)
};

EntropyGap entropy_gap_counter(double p);

// f_a itself, exposed for the gap report and for independent maximization.
double entropy_gap_objective(double a, double x);

}  // namespace betashift
