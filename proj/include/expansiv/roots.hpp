#pragma once

#include <vector>

#include "expansiv/polynomial.hpp"

namespace expansiv {

inline constexpr double kDefaultSolveTolerance = 1e-10;
inline constexpr double kDefaultDedupRadius = 1e-8;

/// Solver tolerance honouring the EXPANSIV_TOL environment override.
double default_solve_tolerance();

struct SolverOptions {
  double tolerance = default_solve_tolerance();
  double dedup_radius = kDefaultDedupRadius;
};

/// Distinct complex roots of a polynomial.
///
/// Roots are listed once each (set semantics); `multiplicity[i]` records the
/// algebraic multiplicity of `roots[i]` as metadata. `residual_bound` is the
/// largest |p(r)| observed over the listed roots, and every root satisfies
/// |p(r)| <= tolerance * (1 + max|coeff|).
struct RootSet {
  std::vector<ComplexPoint> roots;
  std::vector<unsigned> multiplicity;
  double residual_bound = 0.0;
  double tolerance = kDefaultSolveTolerance;
  bool constant_input = false;  // deg 0: no roots, flagged rather than thrown

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  bool has_repeated() const;
};

/// All complex roots of p.
///
/// The polynomial is split exactly into squarefree parts, each part is
/// solved through the eigenvalues of its balanced companion matrix, and each
/// eigenvalue is Newton-polished in extended precision. Output is sorted by
/// (re, im) and is a deterministic function of p and the options.
///
/// Throws Error(ZeroPolynomial) for p = 0 and Error(SolverFailure) when a
/// polished root misses the residual contract.
RootSet roots_all(const RationalPoly& p, const SolverOptions& options = {});

}  // namespace expansiv
