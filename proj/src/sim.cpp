#include "betashift/sim.hpp"

#include <algorithm>
#include <cmath>

namespace betashift {

SimStream::SimStream(const BetaSpec& b, double p, std::uint64_t seed, std::uint64_t stream_id)
    : law_(StreamLaw::Walk), rng_(seed, stream_id), beta_(&b), p_(p) {
  require_open_unit(p, "p");
  b.automaton();  // binary base required
}

SimStream::SimStream(const MarkovMeasure<double>& mm, std::uint64_t seed, std::uint64_t stream_id)
    : law_(StreamLaw::Markov), rng_(seed, stream_id) {
  const std::size_t n = mm.states.size();
  p0_.resize(n);
  succ0_.assign(n, -1);
  succ1_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    double p0 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mm.trans[i][j] == 0.0) continue;
      if (mm.states[j].back() == '0') {
        p0 += mm.trans[i][j];
        succ0_[i] = static_cast<int>(j);
      } else {
        succ1_[i] = static_cast<int>(j);
      }
    }
    p0_[i] = p0;
  }
  // stationary initial state by CDF inversion
  const double u = rng_.next_unit();
  double acc = 0.0;
  mstate_ = static_cast<int>(n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    acc += mm.pi[i];
    if (u < acc) {
      mstate_ = static_cast<int>(i);
      break;
    }
  }
  // burn-in: the first emitted digits are the sampled state's digits, so the
  // stream starts exactly at stationarity
  pending_ = mm.states[static_cast<std::size_t>(mstate_)];
}

int SimStream::next_digit() {
  if (law_ == StreamLaw::Walk) {
    const ParryAutomaton& a = beta_->automaton();
    int d = 0;
    if (a.one_allowed(state_)) {
      d = rng_.bernoulli(p_) ? 0 : 1;
    }
    state_ = a.next(state_, d);
    return d;
  }
  if (pending_pos_ < pending_.size()) {
    return pending_[pending_pos_++] - '0';
  }
  const std::size_t s = static_cast<std::size_t>(mstate_);
  int d;
  if (succ1_[s] < 0) {
    d = 0;
  } else if (succ0_[s] < 0) {
    d = 1;
  } else {
    d = rng_.bernoulli(p0_[s]) ? 0 : 1;
  }
  mstate_ = d == 0 ? succ0_[s] : succ1_[s];
  return d;
}

std::vector<std::uint8_t> SimStream::take(long n) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(next_digit()));
  return out;
}

std::vector<std::uint8_t> walk_sample(const BetaSpec& b, double p, long n, std::uint64_t seed,
                                      std::uint64_t stream_id) {
  return SimStream(b, p, seed, stream_id).take(n);
}

std::vector<std::uint8_t> markov_sample(const MarkovMeasure<double>& mm, long n, std::uint64_t seed,
                                        std::uint64_t stream_id) {
  return SimStream(mm, seed, stream_id).take(n);
}

namespace {

FreqReport reduce_freq(const std::vector<double>& per_stream, double predicted, long n) {
  FreqReport rep;
  rep.n = n;
  rep.streams = static_cast<long>(per_stream.size());
  rep.predicted = predicted;
  double mean = 0.0;
  for (double f : per_stream) mean += f;
  mean /= static_cast<double>(per_stream.size());
  double var = 0.0;
  for (double f : per_stream) var += (f - mean) * (f - mean);
  var /= per_stream.size() > 1 ? static_cast<double>(per_stream.size() - 1) : 1.0;
  rep.mean = mean;
  rep.stderr_ = std::sqrt(var / static_cast<double>(per_stream.size()));
  rep.sigmas = rep.stderr_ > 0.0 ? std::abs(mean - predicted) / rep.stderr_ : 0.0;
  return rep;
}

double stream_zero_fraction(const MarkovMeasure<double>& mm, long n, std::uint64_t seed,
                            std::uint64_t stream_id) {
  SimStream s(mm, seed, stream_id);
  long zeros = 0;
  for (long i = 0; i < n; ++i) zeros += s.next_digit() == 0 ? 1 : 0;
  return static_cast<double>(zeros) / static_cast<double>(n);
}

}  // namespace

FreqReport frequency_simulation(const MarkovMeasure<double>& mm, long n, long streams,
                                std::uint64_t seed) {
  std::vector<double> per(static_cast<std::size_t>(streams));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long t = 0; t < streams; ++t) {
    per[static_cast<std::size_t>(t)] = stream_zero_fraction(mm, n, seed, static_cast<std::uint64_t>(t));
  }
  return reduce_freq(per, markov_zero_mass(mm), n);
}

FreqReport frequency_simulation_serial(const MarkovMeasure<double>& mm, long n, long streams,
                                       std::uint64_t seed) {
  std::vector<double> per(static_cast<std::size_t>(streams));
  for (long t = 0; t < streams; ++t) {
    per[static_cast<std::size_t>(t)] = stream_zero_fraction(mm, n, seed, static_cast<std::uint64_t>(t));
  }
  return reduce_freq(per, markov_zero_mass(mm), n);
}

namespace {

// Frequency of `target` windows over the first K shifts of one walk stream.
double stream_window_fraction(const BetaSpec& b, double p, const std::vector<std::uint8_t>& target,
                              long K, std::uint64_t seed, std::uint64_t stream_id) {
  SimStream s(b, p, seed, stream_id);
  const std::vector<std::uint8_t> digits = s.take(K + static_cast<long>(target.size()) - 1);
  long hits = 0;
  for (long k = 0; k < K; ++k) {
    bool match = true;
    for (std::size_t j = 0; j < target.size() && match; ++j) {
      match = digits[static_cast<std::size_t>(k) + j] == target[j];
    }
    hits += match ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(K);
}

McCesaro reduce_cesaro(const std::vector<double>& per, long K, bool violation) {
  McCesaro r;
  r.iterations = K;
  r.streams = static_cast<long>(per.size());
  r.hypothesis_violation = violation;
  double mean = 0.0;
  for (double v : per) mean += v;
  mean /= static_cast<double>(per.size());
  double var = 0.0;
  for (double v : per) var += (v - mean) * (v - mean);
  var /= per.size() > 1 ? static_cast<double>(per.size() - 1) : 1.0;
  r.value = mean;
  r.half_width = 2.0 * std::sqrt(var / static_cast<double>(per.size()));
  return r;
}

}  // namespace

McCesaro mc_cesaro(const BetaSpec& b, double p, const std::vector<std::uint8_t>& target, long K,
                   long streams, std::uint64_t seed) {
  std::vector<double> per(static_cast<std::size_t>(streams));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long t = 0; t < streams; ++t) {
    per[static_cast<std::size_t>(t)] =
        stream_window_fraction(b, p, target, K, seed, static_cast<std::uint64_t>(t));
  }
  return reduce_cesaro(per, K, b.simpleness().kind != Simpleness::Simple);
}

McCesaro mc_cesaro_serial(const BetaSpec& b, double p, const std::vector<std::uint8_t>& target,
                          long K, long streams, std::uint64_t seed) {
  std::vector<double> per(static_cast<std::size_t>(streams));
  for (long t = 0; t < streams; ++t) {
    per[static_cast<std::size_t>(t)] =
        stream_window_fraction(b, p, target, K, seed, static_cast<std::uint64_t>(t));
  }
  return reduce_cesaro(per, K, b.simpleness().kind != Simpleness::Simple);
}

double walk_prefix_worst_z(const BetaSpec& b, double p, int order, long streams,
                           std::uint64_t seed) {
  const std::vector<std::string> words = enumerate_admissible(b, order, /*full_only=*/false);
  std::vector<long> hits(words.size(), 0);

  std::vector<int> prefix_index(static_cast<std::size_t>(streams));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long t = 0; t < streams; ++t) {
    SimStream s(b, p, seed, static_cast<std::uint64_t>(t));
    std::string w;
    for (int i = 0; i < order; ++i) w.push_back(char('0' + s.next_digit()));
    int idx = -1;
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[j] == w) {
        idx = static_cast<int>(j);
        break;
      }
    }
    prefix_index[static_cast<std::size_t>(t)] = idx;
  }
  for (long t = 0; t < streams; ++t) {
    if (prefix_index[static_cast<std::size_t>(t)] >= 0) {
      ++hits[static_cast<std::size_t>(prefix_index[static_cast<std::size_t>(t)])];
    }
  }

  double worst = 0.0;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const double mu = to_double(mu_cylinder(Word(b, words[j]), p));
    const double freq = static_cast<double>(hits[j]) / static_cast<double>(streams);
    const double sigma = std::sqrt(mu * (1.0 - mu) / static_cast<double>(streams));
    const double z = sigma > 0.0 ? std::abs(freq - mu) / sigma : 0.0;
    worst = std::max(worst, z);
  }
  return worst;
}

}  // namespace betashift
