#include "expansiv/expansion.hpp"

#include <cmath>
#include <string>

namespace expansiv {

namespace {

void require_expandable(const PolyTuple& s) {
  if (s.size() < 2) throw Error(ErrorKind::TupleTooShort, "expansion needs at least two entries");
}

}  // namespace

PolyTuple expand_once(const PolyTuple& s) {
  require_expandable(s);
  const PolyTuple d = derivative(s);
  return PolyTuple(apply_beta(d.entries()));
}

PolyTuple expand_phase(const PolyTuple& s, unsigned phase) {
  if (phase > 0) require_expandable(s);
  PolyTuple current = s;
  for (unsigned k = 0; k < phase; ++k) {
    if (current.is_null()) break;
    current = expand_once(current);
  }
  return current;
}

RankResult rank_and_degree(const PolyTuple& s) {
  require_expandable(s);
  if (s.is_null()) throw Error(ErrorKind::NullTuple, "the null tuple has no rank");

  // Each phase lowers the top degree by one, so D never exceeds it.
  const std::size_t limit = *s.max_degree() + 1;
  PolyTuple current = s;
  for (unsigned phase = 0; phase <= limit; ++phase) {
    PolyTuple next = expand_once(current);
    if (next.is_null()) return {std::move(current), phase};
    current = std::move(next);
  }
  throw Error(ErrorKind::InvalidArgument, "expansion did not vanish within max degree + 1 phases");
}

ExpansionTrace trace_expansion(const PolyTuple& s) {
  auto [rank, degree] = rank_and_degree(s);
  ExpansionTrace trace;
  trace.degree = degree;
  trace.rank = std::move(rank);
  trace.phases.reserve(degree + 1);
  trace.phases.push_back(s);
  for (unsigned k = 1; k <= degree; ++k) trace.phases.push_back(expand_once(trace.phases.back()));

  if (auto limit = limit_of(trace)) {
    trace.limit_index = limit->index;
    trace.local_number = limit->index;
    trace.dimension = degree - limit->index;
    trace.local_number_within_claimed_bound = limit->index <= 2;
  }
  return trace;
}

std::optional<Limit> limit_of(const ExpansionTrace& trace) {
  for (unsigned j = 1; j < trace.phases.size(); ++j) {
    if (trace.phases[j].has_equal_degrees()) return Limit{j, trace.phases[j]};
  }
  return std::nullopt;
}

LocalNumber local_and_dimension(const ExpansionTrace& trace) {
  const auto limit = limit_of(trace);
  if (!limit) throw Error(ErrorKind::NoLimit, "no phase has entries of one common degree");
  return {limit->index, trace.degree - limit->index, limit->index <= 2};
}

double constant_tuple_norm(const PolyTuple& constant) {
  Rational squares;
  for (const auto& v : constant.constant_values()) squares += v * v;
  return std::sqrt(squares.to_double());
}

MeasureSpeed measure_and_speed(const PolyTuple& s) {
  const auto [rank, degree] = rank_and_degree(s);
  MeasureSpeed out{constant_tuple_norm(rank), std::nullopt};
  if (degree >= 1) out.speed = out.measure / degree;
  return out;
}

HarmonicSpeedSum harmonic_speed_sum(const ExpansionTrace& trace) {
  if (trace.degree == 0) throw Error(ErrorKind::DegreeZero, "speed is undefined for degree of expansion 0");
  HarmonicSpeedSum out{0.0, 0.0, harmonic_number(trace.degree)};
  for (unsigned k = 0; k < trace.degree; ++k) {
    const auto ms = measure_and_speed(trace.phases[k]);
    out.lhs += *ms.speed;
  }
  out.rhs = constant_tuple_norm(trace.rank) * out.harmonic.to_double();
  return out;
}

PolyTuple recover(const PolyTuple& expanded, std::span<const InitialCondition> conditions, unsigned phases) {
  if (conditions.size() != phases) {
    throw Error(ErrorKind::ConditionCountMismatch, "expected " + std::to_string(phases) + " initial conditions, got " +
                                                       std::to_string(conditions.size()));
  }
  if (expanded.size() < 2) throw Error(ErrorKind::SingularBeta, "beta is singular for n = 1");

  PolyTuple current = expanded;
  for (const auto& condition : conditions) {
    if (condition.values.size() != current.size()) {
      throw Error(ErrorKind::SizeMismatch, "initial condition length differs from tuple length");
    }
    const auto derivatives = apply_beta_inverse(current.entries());
    std::vector<RationalPoly> entries;
    entries.reserve(derivatives.size());
    for (std::size_t i = 0; i < derivatives.size(); ++i) {
      entries.push_back(antiderivative(derivatives[i], condition.at, condition.values[i]));
    }
    current = PolyTuple(std::move(entries));
  }
  return current;
}

std::vector<InitialCondition> forward_conditions(const PolyTuple& s, unsigned phases, const Rational& at) {
  std::vector<InitialCondition> conditions(phases);
  PolyTuple current = s;
  for (unsigned k = 0; k < phases; ++k) {
    conditions[phases - 1 - k] = InitialCondition{at, current.evaluate(at)};
    current = expand_once(current);
  }
  return conditions;
}

PolyTuple permute(const Permutation& tau, const PolyTuple& s) {
  if (tau.size() != s.size()) throw Error(ErrorKind::SizeMismatch, "permutation and tuple differ in length");
  std::vector<RationalPoly> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[tau(i)]);
  return PolyTuple(std::move(out));
}

TrivialityCertificate system_triviality(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::Degenerate, "n = 1: beta = [0], the system is vacuous");
  const auto size = static_cast<Eigen::Index>(n);
  TrivialityCertificate cert{n, beta_inverse_matrix<Rational>(size), false};
  const Matrix<Rational> product = beta_matrix<Rational>(size) * cert.beta_inverse;
  cert.only_constant_solutions = (product == Matrix<Rational>::Identity(size, size));
  return cert;
}

}  // namespace expansiv
