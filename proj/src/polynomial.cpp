#include "expansiv/polynomial.hpp"

#include <sstream>

namespace expansiv {

Rational evaluate(const RationalPoly& p, const Rational& x) { return horner(p.coeffs(), x); }

ComplexPoint evaluate(const RationalPoly& p, ComplexPoint x) {
  ComplexPoint acc = 0.0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::complex<long double> evaluate(const RationalPoly& p, std::complex<long double> x) {
  std::complex<long double> acc = 0.0L;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

RationalPoly linear_combine(std::span<const std::pair<Rational, RationalPoly>> terms) {
  RationalPoly sum;
  for (const auto& [c, p] : terms) sum += p * c;
  return sum;
}

Rational max_abs_coeff(const RationalPoly& p) {
  Rational m;
  for (const auto& c : p.coeffs()) m = std::max(m, abs(c));
  return m;
}

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    Rational a = c[k];
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    a = abs(a);
    if (k == 0 || a != Rational(1)) os << a;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

RationalPoly make_poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

}  // namespace expansiv
