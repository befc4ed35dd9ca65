#include "betashift/numeric.hpp"

#include <sstream>

namespace betashift {

Prob parse_probability(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      const Rational num(text.substr(0, slash));
      const Rational den(text.substr(slash + 1));
      if (den == 0) throw DomainError("probability denominator is zero");
      return Prob::rational(num / den);
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("bad rational probability '" + text + "'");
    }
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw DomainError("bad probability '" + text + "'");
    return Prob::floating(v);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("bad probability '" + text + "'");
  }
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace betashift
