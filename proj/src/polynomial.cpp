#include "pnrd/polynomial.hpp"

#include <sstream>

namespace pnrd {

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RationalPolynomial rational_poly(std::initializer_list<Rational> ascending) {
  return RationalPolynomial(std::vector<Rational>(ascending));
}

}  // namespace pnrd
