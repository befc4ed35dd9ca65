#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betashift/markov.hpp"
#include "betashift/rng.hpp"

namespace betashift {

enum class StreamLaw { Walk, Markov };

// Seeded, splittable digit-stream generator: the biased walk on the
// follower automaton or a stationary Markov chain.  Identical
// (seed, stream_id, law) reproduce identical streams.
class SimStream {
 public:
  SimStream(const BetaSpec& b, double p, std::uint64_t seed, std::uint64_t stream_id);
  SimStream(const MarkovMeasure<double>& mm, std::uint64_t seed, std::uint64_t stream_id);

  int next_digit();
  std::vector<std::uint8_t> take(long n);

  StreamLaw law() const { return law_; }

 private:
  StreamLaw law_;
  StreamRng rng_;
  // walk
  const BetaSpec* beta_ = nullptr;
  double p_ = 0.0;
  int state_ = 0;
  // markov: per-state digit-0 probability and successors
  std::vector<double> p0_;
  std::vector<int> succ0_, succ1_;
  int mstate_ = 0;
  std::string pending_;  // initial state digits, emitted first
  std::size_t pending_pos_ = 0;
};

std::vector<std::uint8_t> walk_sample(const BetaSpec& b, double p, long n, std::uint64_t seed,
                                      std::uint64_t stream_id = 0);

std::vector<std::uint8_t> markov_sample(const MarkovMeasure<double>& mm, long n, std::uint64_t seed,
                                        std::uint64_t stream_id = 0);

struct FreqReport {
  double mean = 0.0;       // empirical zero frequency across streams
  double stderr_ = 0.0;    // standard error over independent streams
  double predicted = 0.0;  // stationary zero mass of the chain
  double sigmas = 0.0;     // |mean - predicted| / stderr_
  long n = 0;
  long streams = 0;
};

// Stationary sampling; OpenMP across streams with a fixed-order reduction,
// so results are identical at any thread count.
FreqReport frequency_simulation(const MarkovMeasure<double>& mm, long n, long streams,
                                std::uint64_t seed);
FreqReport frequency_simulation_serial(const MarkovMeasure<double>& mm, long n, long streams,
                                       std::uint64_t seed);

struct McCesaro {
  double value = 0.0;
  double half_width = 0.0;  // ~2 standard errors over streams
  long iterations = 0;
  long streams = 0;
  bool hypothesis_violation = false;
};

// Monte Carlo estimate of the Cesaro average (1/K) sum_k sigma^k mu_p[target]:
// each stream contributes the frequency of `target` across its K windows.
// Independent statistical oracle for the exact follower-state recursion.
McCesaro mc_cesaro(const BetaSpec& b, double p, const std::vector<std::uint8_t>& target, long K,
                   long streams, std::uint64_t seed);
McCesaro mc_cesaro_serial(const BetaSpec& b, double p, const std::vector<std::uint8_t>& target,
                          long K, long streams, std::uint64_t seed);

// Empirical prefix-cylinder frequencies of the walk: fraction of streams
// whose first |w| digits equal w, for every admissible w of the given
// order, against the exact mu_p values.  Returns the worst z-score.
double walk_prefix_worst_z(const BetaSpec& b, double p, int order, long streams,
                           std::uint64_t seed);

}  // namespace betashift
