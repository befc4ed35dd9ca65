#include "betashift/words.hpp"

#include <algorithm>

namespace betashift {

namespace {

std::vector<std::uint8_t> parse_digits(std::string_view text) {
  std::vector<std::uint8_t> d;
  d.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError(std::string("word digits must be 0/1, got '") + c + "'");
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (d.empty()) throw DomainError("empty word");
  return d;
}

}  // namespace

Word::Word(const BetaSpec& b, std::string_view digits01) : Word(b, parse_digits(digits01)) {}

Word::Word(const BetaSpec& b, const std::vector<std::uint8_t>& digits) : beta_(&b), digits_(digits) {
  if (digits_.empty()) throw DomainError("empty word");
  const ParryAutomaton& a = b.automaton();
  int s = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    const bool one_ok = a.one_allowed(s);
    if (digits_[i] == 1) {
      if (!one_ok) {
        throw DomainError("inadmissible word: digit 1 at position " + std::to_string(i + 1) +
                          " violates the Parry criterion");
      }
      ++n1_;
    } else if (one_ok) {
      ++n0_;
    }
    s = a.next(s, digits_[i]);
  }
  state_ = s;
}

std::string Word::str() const {
  std::string s(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) s[i] = char('0' + digits_[i]);
  return s;
}

bool is_admissible(const BetaSpec& b, std::string_view digits01) {
  const std::vector<std::uint8_t> d = parse_digits(digits01);
  const ParryAutomaton& a = b.automaton();
  int s = 0;
  for (std::uint8_t digit : d) {
    if (digit == 1 && !a.one_allowed(s)) return false;
    s = a.next(s, digit);
    // reaching the automaton depth on the next read throws UndecidedError,
    // which is exactly the contract for undecided numeric comparisons
  }
  return true;
}

long m_index(const Word& w) {
  const BetaSpec& b = w.beta();
  const long n = static_cast<long>(w.size());
  // The zero-padded word is strictly below the quasi-expansion, so the
  // first drop exists; it is at most one position past the first 1 in the
  // quasi tail after |w|.
  for (long k = 1;; ++k) {
    const int wd = k <= n ? w.digit(static_cast<std::size_t>(k - 1)) : 0;
    const int ed = b.eps_star(static_cast<std::size_t>(k));
    if (wd < ed) return k;
    if (wd > ed) throw DomainError("word is not admissible against the quasi-expansion");
  }
}

long tau(const Word& w) {
  const long m = m_index(w);
  const SimpleInfo info = w.beta().simpleness();
  if (info.kind == Simpleness::Simple) return std::min<long>(m, *info.length);
  return m;
}

long tau_prime(const Word& w) {
  const ParryAutomaton& a = w.beta().automaton();
  int s = 0;
  long best = 0;  // the empty prefix is full
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = a.next(s, w.digit(i));
    if (ParryAutomaton::full_state(s)) best = static_cast<long>(i) + 1;
  }
  return best;
}

CylinderInterval cylinder_interval(const Word& w) {
  const BetaSpec& b = w.beta();
  const int n = static_cast<int>(w.size());
  Real left(0);
  const Real inv = Real(1) / b.value();
  Real scale(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    scale *= inv;
    if (w.digit(i)) left += scale;
  }
  CylinderInterval iv;
  iv.order = n;
  iv.left = to_double(left);
  iv.length = b.pow_minus(n) * b.y(w.parry_state());
  return iv;
}

void for_each_admissible(const BetaSpec& b, int n, const std::function<void(const WordView&)>& fn) {
  if (n < 1) return;
  const ParryAutomaton& a = b.automaton();
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
  std::vector<int> states(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long> n0s(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long> n1s(static_cast<std::size_t>(n) + 1, 0);

  // iterative DFS, digit 0 before digit 1
  std::vector<int> branch(static_cast<std::size_t>(n) + 1, 0);
  int depth = 0;
  while (true) {
    if (depth < n && branch[static_cast<std::size_t>(depth)] <= 1) {
      const int d = branch[static_cast<std::size_t>(depth)]++;
      const int s = states[static_cast<std::size_t>(depth)];
      const bool one_ok = a.one_allowed(s);
      if (d == 1 && !one_ok) continue;
      digits[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(d);
      states[static_cast<std::size_t>(depth) + 1] = a.next(s, d);
      n0s[static_cast<std::size_t>(depth) + 1] =
          n0s[static_cast<std::size_t>(depth)] + (d == 0 && one_ok ? 1 : 0);
      n1s[static_cast<std::size_t>(depth) + 1] = n1s[static_cast<std::size_t>(depth)] + d;
      ++depth;
      branch[static_cast<std::size_t>(depth)] = 0;
      fn(WordView{digits.data(), depth, states[static_cast<std::size_t>(depth)],
                  n0s[static_cast<std::size_t>(depth)], n1s[static_cast<std::size_t>(depth)]});
    } else {
      if (depth == 0) break;
      --depth;
    }
  }
}

std::vector<std::string> enumerate_admissible(const BetaSpec& b, int n, bool full_only, int guard) {
  if (n < 1) throw DomainError("word length must be >= 1");
  if (n > guard) {
    throw GuardError("enumeration length " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(guard));
  }
  std::vector<std::string> out;
  for_each_admissible(b, n, [&](const WordView& w) {
    if (w.length != n) return;
    if (full_only && !ParryAutomaton::full_state(w.state)) return;
    out.push_back(w.str());
  });
  return out;
}

std::vector<std::uint64_t> count_admissible(const BetaSpec& b, int n, bool full_only, int guard) {
  if (n < 1) throw DomainError("word length must be >= 1");
  if (n > guard) {
    throw GuardError("count length " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(guard));
  }
  const ParryAutomaton& a = b.automaton();
  std::vector<std::uint64_t> mass(1, 1);  // state multiplicities, empty word
  std::vector<std::uint64_t> counts;
  counts.reserve(static_cast<std::size_t>(n));
  for (int len = 1; len <= n; ++len) {
    std::vector<std::uint64_t> next(std::min<std::size_t>(mass.size() + 1,
                                                          static_cast<std::size_t>(a.states())),
                                    0);
    auto bump = [&next](int s, std::uint64_t c) {
      if (static_cast<std::size_t>(s) >= next.size()) next.resize(static_cast<std::size_t>(s) + 1, 0);
      next[static_cast<std::size_t>(s)] += c;
    };
    for (std::size_t s = 0; s < mass.size(); ++s) {
      if (mass[s] == 0) continue;
      const int si = static_cast<int>(s);
      bump(a.next(si, 0), mass[s]);
      if (a.one_allowed(si)) bump(a.next(si, 1), mass[s]);
    }
    mass = std::move(next);
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < mass.size(); ++s) {
      if (full_only && s != 0) continue;
      total += mass[s];
    }
    counts.push_back(total);
  }
  return counts;
}

}  // namespace betashift
