#pragma once

// Exact helpers used by the root solver to split a polynomial into
// squarefree parts. Not part of the public surface.

#include <utility>
#include <vector>

#include "expansiv/polynomial.hpp"

namespace expansiv::detail {

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

RationalPoly monic(const RationalPoly& p);

/// Monic gcd; gcd(0, 0) = 0.
RationalPoly gcd(RationalPoly a, RationalPoly b);

struct SquarefreeFactor {
  RationalPoly factor;  // squarefree, nonconstant, pairwise coprime
  unsigned multiplicity;
};

/// Yun's algorithm: p = c · Π factorᵢ^multiplicityᵢ.
std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPoly& p);

}  // namespace expansiv::detail
