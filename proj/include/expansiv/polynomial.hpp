#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expansiv/rational.hpp"

namespace expansiv {

using ComplexPoint = std::complex<double>;

/// Dense univariate polynomial, coefficients in ascending power order.
///
/// The representation is canonical: the highest stored coefficient is
/// nonzero, except for the zero polynomial which is the single entry 0.
/// The zero polynomial has no degree (degree() is empty); callers that
/// compare degrees must handle it explicitly.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() : coeffs_{Scalar(0)} {}
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }

  static Polynomial monomial(Scalar c, std::size_t power) {
    std::vector<Scalar> coeffs(power + 1, Scalar(0));
    coeffs[power] = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  std::optional<std::size_t> degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Scalar(0); }
  bool is_constant() const { return coeffs_.size() == 1; }

  std::span<const Scalar> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  Polynomial& operator/=(const Scalar& c) {
    for (auto& a : coeffs_) a /= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend Polynomial operator/(Polynomial p, const Scalar& c) { return p /= c; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  }

  std::vector<Scalar> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

/// Horner evaluation; X must be constructible from Scalar.
template <class Scalar, class X>
X horner(std::span<const Scalar> coeffs, const X& x) {
  X acc = X(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + X(*it);
  return acc;
}

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.is_constant()) return Polynomial<Scalar>();
  const auto c = p.coeffs();
  std::vector<Scalar> out(c.size() - 1, Scalar(0));
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = Scalar(static_cast<long>(k)) * c[k];
  return Polynomial<Scalar>(std::move(out));
}

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p, unsigned order) {
  Polynomial<Scalar> d = p;
  for (unsigned k = 0; k < order; ++k) d = derivative(d);
  return d;
}

/// The unique F with F' = p and F(at) = value.
template <class Scalar>
Polynomial<Scalar> antiderivative(const Polynomial<Scalar>& p, const Scalar& at, const Scalar& value) {
  const auto c = p.coeffs();
  std::vector<Scalar> out(c.size() + 1, Scalar(0));
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / Scalar(static_cast<long>(k + 1));
  Polynomial<Scalar> F(std::move(out));
  const Scalar shift = value - horner(F.coeffs(), at);
  return F + Polynomial<Scalar>::constant(shift);
}

template <class To, class From, class Convert>
Polynomial<To> cast(const Polynomial<From>& p, Convert convert) {
  std::vector<To> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(convert(c));
  return Polynomial<To>(std::move(out));
}

Rational evaluate(const RationalPoly& p, const Rational& x);
ComplexPoint evaluate(const RationalPoly& p, ComplexPoint x);
std::complex<long double> evaluate(const RationalPoly& p, std::complex<long double> x);

/// Σ cᵢ·pᵢ in canonical form.
RationalPoly linear_combine(std::span<const std::pair<Rational, RationalPoly>> terms);

Rational max_abs_coeff(const RationalPoly& p);

/// Human-readable form, e.g. "5x^4 - 3x^2 + 2x".
std::string to_string(const RationalPoly& p);

/// Convenience for tests and literals: integer coefficients, ascending.
RationalPoly make_poly(std::initializer_list<long> ascending);

}  // namespace expansiv
