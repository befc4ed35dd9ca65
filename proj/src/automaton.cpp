#include "betashift/automaton.hpp"

namespace betashift {

namespace {

// Longest t <= cap such that `word` ends with eps_1..eps_t.
int suffix_match(const std::vector<int>& word, const std::vector<int>& eps, int cap) {
  const int n = static_cast<int>(word.size());
  for (int t = std::min(cap, n); t >= 1; --t) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i) ok = word[static_cast<std::size_t>(n - t + i)] == eps[static_cast<std::size_t>(i)];
    if (ok) return t;
  }
  return 0;
}

}  // namespace

ParryAutomaton ParryAutomaton::simple(const std::vector<int>& eps) {
  const int M = static_cast<int>(eps.size());
  if (M < 1) throw DomainError("empty expansion of 1");
  ParryAutomaton a;
  a.simple_ = true;
  a.one_ok_.resize(static_cast<std::size_t>(M));
  a.next0_.resize(static_cast<std::size_t>(M));
  a.next1_.assign(static_cast<std::size_t>(M), -1);
  for (int s = 0; s < M; ++s) {
    // eps*_{s+1}: the expansion digit, decremented at the period end.
    const int star = s + 1 < M ? eps[static_cast<std::size_t>(s)] : eps[static_cast<std::size_t>(M - 1)] - 1;
    a.one_ok_[static_cast<std::size_t>(s)] = star >= 1;
    // A word in state s behaves like the concrete word eps_1..eps_s; the
    // successor is its suffix match after appending the digit.
    std::vector<int> word(eps.begin(), eps.begin() + s);
    for (int d = 0; d <= 1; ++d) {
      if (d > star) continue;
      word.push_back(d);
      const int t = d == star ? (s + 1) % M : suffix_match(word, eps, M - 1);
      if (d == 0) {
        a.next0_[static_cast<std::size_t>(s)] = t;
      } else {
        a.next1_[static_cast<std::size_t>(s)] = t;
      }
      word.pop_back();
    }
  }
  return a;
}

ParryAutomaton ParryAutomaton::infinite(const std::vector<int>& eps) {
  const int depth = static_cast<int>(eps.size());
  if (depth < 1) throw DomainError("empty expansion prefix");
  ParryAutomaton a;
  a.simple_ = false;
  a.one_ok_.resize(static_cast<std::size_t>(depth));
  a.next0_.resize(static_cast<std::size_t>(depth));
  a.next1_.assign(static_cast<std::size_t>(depth), -1);

  // KMP failure function of eps_1..eps_depth.
  std::vector<int> fail(static_cast<std::size_t>(depth) + 1, 0);
  for (int i = 2; i <= depth; ++i) {
    int t = fail[static_cast<std::size_t>(i - 1)];
    while (t > 0 && eps[static_cast<std::size_t>(t)] != eps[static_cast<std::size_t>(i - 1)]) t = fail[static_cast<std::size_t>(t)];
    fail[static_cast<std::size_t>(i)] = eps[static_cast<std::size_t>(t)] == eps[static_cast<std::size_t>(i - 1)] ? t + 1 : 0;
  }

  for (int s = 0; s < depth; ++s) {
    const int star = eps[static_cast<std::size_t>(s)];  // eps*_{s+1} = eps_{s+1}
    a.one_ok_[static_cast<std::size_t>(s)] = star >= 1;
    for (int d = 0; d <= 1; ++d) {
      if (d > star) continue;
      int t;
      if (d == star) {
        t = s + 1;  // may equal depth; rejected on the next use
      } else {
        t = fail[static_cast<std::size_t>(s)];
        while (t > 0 && eps[static_cast<std::size_t>(t)] != d) t = fail[static_cast<std::size_t>(t)];
        t = eps[static_cast<std::size_t>(t)] == d ? t + 1 : 0;
      }
      if (d == 0) {
        a.next0_[static_cast<std::size_t>(s)] = t;
      } else {
        a.next1_[static_cast<std::size_t>(s)] = t;
      }
    }
  }
  return a;
}

}  // namespace betashift
