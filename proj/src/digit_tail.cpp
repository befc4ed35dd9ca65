#include "betashift/digit_tail.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "betashift/errors.hpp"

namespace betashift {

void DigitTail::normalize() {
  if (!period.empty() && std::all_of(period.begin(), period.end(), [](int d) { return d == 0; })) {
    period.clear();
  }
  if (period.empty()) {
    while (!preperiod.empty() && preperiod.back() == 0) preperiod.pop_back();
  }
}

std::string DigitTail::to_string() const {
  std::ostringstream os;
  for (int d : preperiod) os << d;
  if (!period.empty()) {
    if (!preperiod.empty()) os << ' ';
    os << "per(";
    for (int d : period) os << d;
    os << ')';
  }
  return os.str();
}

namespace {

void append_digits(std::vector<int>& out, const std::string& tok, const char* what) {
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError(std::string("bad digit '") + c + "' in " + what);
    }
    out.push_back(c - '0');
  }
}

}  // namespace

DigitTail DigitTail::parse(const std::string& text) {
  DigitTail tail;
  std::istringstream is(text);
  std::string tok;
  bool done = false;
  while (is >> tok) {
    if (done) throw DomainError("digit tail: tokens after the period/zero-tail marker");
    if (tok.rfind("per(", 0) == 0) {
      if (tok.back() != ')') throw DomainError("digit tail: unterminated per(...)");
      append_digits(tail.period, tok.substr(4, tok.size() - 5), "period");
      if (tail.period.empty()) throw DomainError("digit tail: empty period");
      done = true;
      continue;
    }
    const std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      const std::string head = tok.substr(0, caret);
      const std::string count = tok.substr(caret + 1);
      if (head.size() != 1 || !std::isdigit(static_cast<unsigned char>(head[0]))) {
        throw DomainError("digit tail: run-length base must be a single digit");
      }
      if (count == "inf") {
        if (head[0] != '0') throw DomainError("digit tail: only 0^inf is a valid infinite run");
        done = true;  // explicit zero tail
        continue;
      }
      std::size_t pos = 0;
      long k = 0;
      try {
        k = std::stol(count, &pos);
      } catch (const std::exception&) {
        throw DomainError("digit tail: bad run length '" + count + "'");
      }
      if (pos != count.size() || k < 0 || k > 4096) {
        throw DomainError("digit tail: bad run length '" + count + "'");
      }
      tail.preperiod.insert(tail.preperiod.end(), static_cast<std::size_t>(k), head[0] - '0');
      continue;
    }
    append_digits(tail.preperiod, tok, "digits");
  }
  if (tail.preperiod.empty() && tail.period.empty()) {
    throw DomainError("digit tail: empty input");
  }
  tail.normalize();
  return tail;
}

int compare_shifted(const DigitTail& tail, std::size_t k) {
  // Both sigma^k(tail) and tail are eventually periodic with period
  // max(|period|, 1) and preperiod at most |preperiod|; agreement over one
  // extra period past both preperiods pins equality.
  const std::size_t per = std::max<std::size_t>(tail.period_length(), 1);
  const std::size_t window = tail.preperiod_length() + 2 * per + 2;
  for (std::size_t j = 1; j <= window; ++j) {
    const int a = tail.digit(k + j);
    const int b = tail.digit(j);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

}  // namespace betashift
