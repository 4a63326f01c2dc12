#include "expansiv/rational.hpp"

#include <cmath>
#include <ostream>

#include "expansiv/errors.hpp"

namespace expansiv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) {
      throw Error(ErrorKind::ParseError, "bad denominator in '" + std::string(text) + "'");
    }
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(ErrorKind::ParseError, "bad numerator in '" + std::string(text) + "'");
  }

  mpz_class n(std::string(digits), 10);
  if (num.front() == '-') n = -n;
  mpz_class d = 1;
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  Rational r;
  r.value_ = std::move(q);
  return r;
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "non-finite double");
  Rational r;
  r.value_ = mpq_class(value);
  return r;
}

double Rational::to_double() const { return value_.get_d(); }

long double Rational::to_long_double() const {
  // Two-term split gives ~106 bits, more than the 64-bit long double mantissa.
  mpf_class f(value_, 160);
  const double hi = f.get_d();
  mpf_class rest(f - hi, 160);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational harmonic_number(unsigned n) {
  Rational h;
  for (unsigned m = 1; m <= n; ++m) h += Rational(1, static_cast<long>(m));
  return h;
}

}  // namespace expansiv
