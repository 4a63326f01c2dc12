#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "expansiv/polynomial.hpp"

namespace expansiv {

/// Ordered, fixed-length tuple of polynomials (f₁, …, fₙ).
class PolyTuple {
 public:
  PolyTuple() = default;
  explicit PolyTuple(std::vector<RationalPoly> entries) : entries_(std::move(entries)) {}
  PolyTuple(std::initializer_list<RationalPoly> entries) : entries_(entries) {}

  /// The null tuple (0, …, 0) of length n.
  static PolyTuple null(std::size_t n) { return PolyTuple(std::vector<RationalPoly>(n)); }
  static PolyTuple constants(std::span<const Rational> values);

  std::size_t size() const { return entries_.size(); }
  const RationalPoly& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const RationalPoly> entries() const { return entries_; }

  bool is_null() const;
  /// Every entry has degree ≤ 0 (the null tuple included).
  bool is_constant() const;
  /// Largest entry degree; empty for the null tuple.
  std::optional<std::size_t> max_degree() const;
  /// All entries nonzero and of one common degree.
  bool has_equal_degrees() const;

  /// Constant term of each entry; only meaningful for constant tuples.
  std::vector<Rational> constant_values() const;

  /// S(a) = (f₁(a), …, fₙ(a)).
  std::vector<Rational> evaluate(const Rational& at) const;
  Eigen::VectorXcd evaluate(ComplexPoint at) const;

  PolyTuple& operator+=(const PolyTuple& rhs);
  PolyTuple& operator-=(const PolyTuple& rhs);
  PolyTuple& operator*=(const Rational& c);

  friend PolyTuple operator+(PolyTuple a, const PolyTuple& b) { return a += b; }
  friend PolyTuple operator-(PolyTuple a, const PolyTuple& b) { return a -= b; }
  friend PolyTuple operator*(PolyTuple a, const Rational& c) { return a *= c; }
  friend PolyTuple operator*(const Rational& c, PolyTuple a) { return a *= c; }
  friend bool operator==(const PolyTuple& a, const PolyTuple& b) = default;

 private:
  std::vector<RationalPoly> entries_;
};

/// Entrywise derivative ∇S.
PolyTuple derivative(const PolyTuple& s);

/// Pins the antiderivative of one recovery step: the recovered tuple takes
/// `values` at x = `at`.
struct InitialCondition {
  Rational at;
  std::vector<Rational> values;
};

/// Bijection on {0, …, n−1}; entry i of a permuted tuple is entry mapping[i].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);
  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }
  std::span<const std::size_t> mapping() const { return mapping_; }
  /// +1 for even, −1 for odd permutations.
  int sign() const { return sign_; }

 private:
  std::vector<std::size_t> mapping_;
  int sign_ = 1;
};

}  // namespace expansiv
