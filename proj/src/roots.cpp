#include "expansiv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include <Eigen/Dense>

#include "expansiv/errors.hpp"
#include "squarefree.hpp"

namespace expansiv {

namespace {

using cld = std::complex<long double>;

constexpr long double kLongEps = std::numeric_limits<long double>::epsilon();
constexpr int kMaxAberthIterations = 500;

// Parlett-Reinsch balancing of the companion matrix; scales row/column pairs
// by powers of two until the off-diagonal 1-norms stop improving.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  constexpr double gamma = 0.9;
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double row = m.row(i).lpNorm<1>() - std::abs(m(i, i));
      const double col = m.col(i).lpNorm<1>() - std::abs(m(i, i));
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < gamma * (col + row)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

std::vector<long double> float_coefficients(const RationalPoly& f) {
  RationalPoly scaled = f;
  const Rational big = max_abs_coeff(f);
  if (big > Rational(1000000000000L)) scaled = f / big;
  std::vector<long double> c;
  c.reserve(scaled.size());
  for (const auto& a : scaled.coeffs()) c.push_back(a.to_long_double());
  return c;
}

std::vector<cld> companion_eigenvalues(const std::vector<long double>& c) {
  const auto degree = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  if (degree > 1) companion.diagonal(-1).setOnes();
  const long double lead = c.back();
  for (Eigen::Index k = 0; k < degree; ++k) {
    companion(k, degree - 1) = static_cast<double>(-c[static_cast<std::size_t>(k)] / lead);
  }
  balance(companion);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::SolverFailure, "companion eigenvalue iteration did not converge");
  }
  std::vector<cld> z;
  z.reserve(static_cast<std::size_t>(degree));
  for (const auto& e : solver.eigenvalues()) z.emplace_back(e.real(), e.imag());
  return z;
}

void value_and_slope(const std::vector<long double>& c, const cld& z, cld& value, cld& slope) {
  value = 0.0L;
  slope = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
}

// Aberth-Ehrlich simultaneous refinement. Roots converge independently and
// are frozen once their correction drops below extended-precision noise.
void aberth_polish(const std::vector<long double>& c, std::vector<cld>& z) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      cld value, slope;
      value_and_slope(c, z[i], value, slope);
      if (value == 0.0L) {
        done[i] = true;
        continue;
      }
      cld repulsion = 0.0L;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) repulsion += 1.0L / (z[i] - z[j]);
      }
      const cld ratio = (slope == 0.0L) ? cld(1.0L) : value / slope;
      const cld step = ratio / (1.0L - ratio * repulsion);
      z[i] -= step;
      if (std::abs(step) <= 8 * kLongEps * (1.0L + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
}

// A real squarefree polynomial has conjugate-symmetric roots; remove the
// last-bit asymmetry left by the simultaneous iteration.
void symmetrize(std::vector<cld>& z) {
  const long double agree = 1e-12L;
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i] || z[i].imag() <= 0.0L) continue;
    std::size_t best = z.size();
    long double best_dist = 0.0L;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (used[j] || j == i || z[j].imag() >= 0.0L) continue;
      const long double d = std::abs(z[j] - std::conj(z[i]));
      if (best == z.size() || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best != z.size() && best_dist <= agree * (1.0L + std::abs(z[i]))) {
      const cld mid = 0.5L * (z[i] + std::conj(z[best]));
      z[i] = mid;
      z[best] = std::conj(mid);
      used[i] = used[best] = true;
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!used[i] && std::abs(z[i].imag()) <= agree * (1.0L + std::abs(z[i]))) z[i].imag(0.0L);
  }
}

std::vector<cld> solve_squarefree(const RationalPoly& f) {
  const std::size_t degree = *f.degree();
  if (degree == 1) {
    const Rational r = -f.coeff(0) / f.coeff(1);
    return {cld(r.to_long_double(), 0.0L)};
  }
  const auto c = float_coefficients(f);
  auto z = companion_eigenvalues(c);
  aberth_polish(c, z);
  symmetrize(z);
  return z;
}

bool lexicographic_less(const ComplexPoint& a, const ComplexPoint& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

double default_solve_tolerance() {
  if (const char* env = std::getenv("EXPANSIV_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) return v;
  }
  return kDefaultSolveTolerance;
}

bool RootSet::has_repeated() const {
  return std::any_of(multiplicity.begin(), multiplicity.end(), [](unsigned m) { return m > 1; });
}

RootSet roots_all(const RationalPoly& p, const SolverOptions& options) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "every point is a root of the zero polynomial");

  RootSet out;
  out.tolerance = options.tolerance;
  if (p.is_constant()) {
    out.constant_input = true;
    return out;
  }

  struct Candidate {
    ComplexPoint z;
    unsigned multiplicity;
  };
  std::vector<Candidate> found;
  for (const auto& [factor, multiplicity] : detail::squarefree_decomposition(p)) {
    for (const auto& z : solve_squarefree(factor)) {
      found.push_back({ComplexPoint(static_cast<double>(z.real()), static_cast<double>(z.imag())), multiplicity});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return lexicographic_less(a.z, b.z); });

  for (const auto& cand : found) {
    auto near = std::find_if(out.roots.begin(), out.roots.end(), [&](const ComplexPoint& r) {
      return std::abs(r - cand.z) <= options.dedup_radius;
    });
    if (near != out.roots.end()) {
      out.multiplicity[static_cast<std::size_t>(near - out.roots.begin())] += cand.multiplicity;
    } else {
      out.roots.push_back(cand.z);
      out.multiplicity.push_back(cand.multiplicity);
    }
  }

  const long double coeff_scale = 1.0L + max_abs_coeff(p).to_long_double();
  const long double bound = static_cast<long double>(options.tolerance) * coeff_scale;
  for (const auto& r : out.roots) {
    const cld z(r.real(), r.imag());
    const long double residual = std::abs(evaluate(p, z));
    // Rounding floor of the residual evaluation itself; only matters for
    // roots of large modulus where the relative contract is below it.
    long double magnitude = 0.0L;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
      magnitude = magnitude * std::abs(z) + std::abs(it->to_long_double());
    }
    const long double floor = 1e3L * std::numeric_limits<double>::epsilon() * magnitude;
    if (residual > std::max(bound, floor) || !std::isfinite(static_cast<double>(residual))) {
      throw Error(ErrorKind::SolverFailure,
                  "root residual " + std::to_string(static_cast<double>(residual)) + " exceeds bound for " +
                      to_string(p));
    }
    out.residual_bound = std::max(out.residual_bound, static_cast<double>(residual));
  }
  return out;
}

}  // namespace expansiv
