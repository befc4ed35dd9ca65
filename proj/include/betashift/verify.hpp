#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace betashift {

struct CheckResult {
  std::string id;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  int max_word_len = 8;        // exhaustive scans
  int brute_force_len = 12;    // unpruned 2^n oracle
  int grid = 25;               // dimension grids
  long mc_length = 100000;     // simulation stream length
  long mc_streams = 64;
  std::uint64_t seed = 12345;
  bool deep = false;           // acceptance-sized runs
  int only_m = -1;             // restrict family-indexed suites to one family
  std::string p_text;          // override the default rational parameter (a/b)
};

std::vector<CheckResult> verify_combinatorics(const VerifyOptions& opt);
std::vector<CheckResult> verify_measures(const VerifyOptions& opt);
std::vector<CheckResult> verify_markov(const VerifyOptions& opt);
std::vector<CheckResult> verify_dimension(const VerifyOptions& opt);

std::vector<CheckResult> verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace betashift
