#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace expansiv {

/// Exact rational number backed by GMP, always kept in lowest terms.
///
/// Wraps mpq_class rather than exposing it so that arithmetic never leaks
/// gmpxx expression templates into generic (Eigen, template) code.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of a number type
  Rational(int value) : value_(value) {}   // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q" (decimal digits, optional sign on p).
  /// Throws Error(ParseError) on anything else, including q == 0.
  static Rational parse(std::string_view text);

  /// Exact binary value of a finite double.
  static Rational from_double(double value);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

/// 1 + 1/2 + ... + 1/n, exact.
Rational harmonic_number(unsigned n);

}  // namespace expansiv

namespace Eigen {

template <>
struct NumTraits<expansiv::Rational> : GenericNumTraits<expansiv::Rational> {
  using Real = expansiv::Rational;
  using NonInteger = expansiv::Rational;
  using Nested = expansiv::Rational;
  using Literal = expansiv::Rational;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
