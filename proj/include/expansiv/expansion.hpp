#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "expansiv/errors.hpp"
#include "expansiv/tuple.hpp"

namespace expansiv {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// β = J − I, the all-ones-minus-identity matrix.
template <class Scalar>
Matrix<Scalar> beta_matrix(Eigen::Index n) {
  Matrix<Scalar> b = Matrix<Scalar>::Constant(n, n, Scalar(1));
  for (Eigen::Index i = 0; i < n; ++i) b(i, i) = Scalar(0);
  return b;
}

/// β⁻¹ = J/(n−1) − I. β is singular for n = 1.
template <class Scalar>
Matrix<Scalar> beta_inverse_matrix(Eigen::Index n) {
  if (n < 2) throw Error(ErrorKind::SingularBeta, "beta is singular for n = 1");
  const Scalar off = Scalar(1) / Scalar(static_cast<long>(n - 1));
  Matrix<Scalar> b = Matrix<Scalar>::Constant(n, n, off);
  for (Eigen::Index i = 0; i < n; ++i) b(i, i) = off - Scalar(1);
  return b;
}

namespace detail {

inline Rational divide(const Rational& x, long k) { return x / Rational(k); }
inline RationalPoly divide(const RationalPoly& p, long k) { return p / Rational(k); }
inline ComplexPoint divide(const ComplexPoint& z, long k) { return z / static_cast<double>(k); }
inline double divide(double x, long k) { return x / static_cast<double>(k); }

}  // namespace detail

/// output[i] = Σ_{j≠i} input[j].
template <class T>
std::vector<T> apply_beta(std::span<const T> values) {
  std::vector<T> out(values.size(), T{});
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j != i) out[i] += values[j];
    }
  }
  return out;
}

template <class T>
std::vector<T> apply_beta(const std::vector<T>& values) {
  return apply_beta(std::span<const T>(values));
}

/// Inverse of apply_beta: output[i] = (Σ input)/(n−1) − input[i].
template <class T>
std::vector<T> apply_beta_inverse(std::span<const T> values) {
  if (values.size() < 2) throw Error(ErrorKind::SingularBeta, "beta is singular for n = 1");
  T total{};
  for (const auto& v : values) total += v;
  const T share = detail::divide(total, static_cast<long>(values.size() - 1));
  std::vector<T> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(share - v);
  return out;
}

template <class T>
std::vector<T> apply_beta_inverse(const std::vector<T>& values) {
  return apply_beta_inverse(std::span<const T>(values));
}

/// Eigen form of apply_beta: (sum of v)·1 − v.
template <class Derived>
typename Derived::PlainObject apply_beta(const Eigen::MatrixBase<Derived>& v) {
  using Plain = typename Derived::PlainObject;
  return Plain::Constant(v.rows(), v.cols(), v.sum()) - v;
}

/// One phase of expansion: entry i becomes Σ_{j≠i} f′ⱼ.
PolyTuple expand_once(const PolyTuple& s);

/// S^phase; expand_phase(S, 0) = S.
PolyTuple expand_phase(const PolyTuple& s, unsigned phase);

struct RankResult {
  PolyTuple rank;   // last non-null phase (a constant tuple)
  unsigned degree;  // its phase index, the degree of expansion
};

RankResult rank_and_degree(const PolyTuple& s);

/// Full phase sequence S⁰ … S^D with the scalar invariants read off it.
struct ExpansionTrace {
  std::vector<PolyTuple> phases;
  unsigned degree = 0;
  PolyTuple rank;
  std::optional<unsigned> limit_index;
  std::optional<unsigned> local_number;
  std::optional<unsigned> dimension;
  // Audit of the claimed bound L ≤ 2; recorded, never enforced.
  std::optional<bool> local_number_within_claimed_bound;
};

ExpansionTrace trace_expansion(const PolyTuple& s);

struct Limit {
  unsigned index;
  PolyTuple tuple;
};

/// First phase j ≥ 1 whose entries are all nonzero with one common degree.
std::optional<Limit> limit_of(const ExpansionTrace& trace);

struct LocalNumber {
  unsigned local_number;
  unsigned dimension;
  bool within_claimed_bound;  // L ≤ 2
};

/// L = limit index, k = D − L. Throws Error(NoLimit).
LocalNumber local_and_dimension(const ExpansionTrace& trace);

struct MeasureSpeed {
  double measure;               // N(S) = ‖R(S)‖
  std::optional<double> speed;  // N(S)/D, absent when D = 0
};

MeasureSpeed measure_and_speed(const PolyTuple& s);

/// Euclidean norm of a constant tuple, from the exact sum of squares.
double constant_tuple_norm(const PolyTuple& constant);

struct HarmonicSpeedSum {
  double lhs;         // Σ_{k<D} ν(S^k), phase by phase
  double rhs;         // N(S)·H_D
  Rational harmonic;  // H_D
};

HarmonicSpeedSum harmonic_speed_sum(const ExpansionTrace& trace);

/// Undo `phases` expansions. conditions[0] pins the first recovery step
/// (S^{k−1} from S^k), the last one pins the original tuple.
PolyTuple recover(const PolyTuple& expanded, std::span<const InitialCondition> conditions, unsigned phases);

/// Conditions that make recover(expand_phase(s, phases), ·, phases) return s:
/// the known forward pass S^{k−1}(at), …, S⁰(at).
std::vector<InitialCondition> forward_conditions(const PolyTuple& s, unsigned phases, const Rational& at = Rational(0));

PolyTuple permute(const Permutation& tau, const PolyTuple& s);

/// Certificate that Σ_{j≠i} f′ⱼ = 0 for all i forces every f′ᵢ = 0.
struct TrivialityCertificate {
  std::size_t n;
  Matrix<Rational> beta_inverse;  // witness: β·β⁻¹ = I, checked exactly
  bool only_constant_solutions;
};

/// Throws Error(Degenerate) for n = 1.
TrivialityCertificate system_triviality(std::size_t n);

}  // namespace expansiv
