#include "squarefree.hpp"

#include "expansiv/errors.hpp"

namespace expansiv::detail {

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  const std::size_t db = *b.degree();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  if (a.is_zero() || *a.degree() < db) return {RationalPoly(), a};

  const std::size_t da = *a.degree();
  std::vector<Rational> quot(da - db + 1);
  const Rational lead = b.leading();
  const auto bc = b.coeffs();
  for (std::size_t k = da + 1; k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db == 0 ? 1 : db);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;

  const RationalPoly dp = derivative(p);
  const RationalPoly g = gcd(p, dp);
  RationalPoly c = divmod(p, g).first;
  RationalPoly d = divmod(dp, g).first - derivative(c);
  for (unsigned i = 1; !c.is_constant(); ++i) {
    RationalPoly a = gcd(c, d);
    c = divmod(c, a).first;
    d = divmod(d, a).first - derivative(c);
    if (!a.is_constant()) out.push_back({monic(a), i});
  }
  return out;
}

}  // namespace expansiv::detail
