#include "expansiv/tuple.hpp"

#include <algorithm>
#include <numeric>

#include "expansiv/errors.hpp"

namespace expansiv {

namespace {

void require_same_size(const PolyTuple& a, const PolyTuple& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "tuples of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

PolyTuple PolyTuple::constants(std::span<const Rational> values) {
  std::vector<RationalPoly> e;
  e.reserve(values.size());
  for (const auto& v : values) e.push_back(RationalPoly::constant(v));
  return PolyTuple(std::move(e));
}

bool PolyTuple::is_null() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RationalPoly& p) { return p.is_zero(); });
}

bool PolyTuple::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RationalPoly& p) { return p.is_constant(); });
}

std::optional<std::size_t> PolyTuple::max_degree() const {
  std::optional<std::size_t> best;
  for (const auto& p : entries_) {
    if (auto d = p.degree(); d && (!best || *d > *best)) best = d;
  }
  return best;
}

bool PolyTuple::has_equal_degrees() const {
  if (entries_.empty()) return false;
  const auto first = entries_.front().degree();
  if (!first) return false;
  return std::all_of(entries_.begin(), entries_.end(), [&](const RationalPoly& p) { return p.degree() == first; });
}

std::vector<Rational> PolyTuple::constant_values() const {
  std::vector<Rational> v;
  v.reserve(entries_.size());
  for (const auto& p : entries_) v.push_back(p.coeff(0));
  return v;
}

std::vector<Rational> PolyTuple::evaluate(const Rational& at) const {
  std::vector<Rational> v;
  v.reserve(entries_.size());
  for (const auto& p : entries_) v.push_back(expansiv::evaluate(p, at));
  return v;
}

Eigen::VectorXcd PolyTuple::evaluate(ComplexPoint at) const {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto z = expansiv::evaluate(entries_[i], std::complex<long double>(at.real(), at.imag()));
    v[static_cast<Eigen::Index>(i)] = ComplexPoint(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return v;
}

PolyTuple& PolyTuple::operator+=(const PolyTuple& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

PolyTuple& PolyTuple::operator-=(const PolyTuple& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

PolyTuple& PolyTuple::operator*=(const Rational& c) {
  for (auto& p : entries_) p *= c;
  return *this;
}

PolyTuple derivative(const PolyTuple& s) {
  std::vector<RationalPoly> d;
  d.reserve(s.size());
  for (const auto& p : s.entries()) d.push_back(derivative(p));
  return PolyTuple(std::move(d));
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (auto m : mapping_) {
    if (m >= mapping_.size() || seen[m]) throw Error(ErrorKind::InvalidArgument, "mapping is not a bijection");
    seen[m] = true;
  }
  // Parity from the cycle decomposition: each cycle of length L contributes L−1 transpositions.
  std::fill(seen.begin(), seen.end(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < mapping_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = mapping_[k]) {
      seen[k] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  sign_ = (transpositions % 2 == 0) ? 1 : -1;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::swap(m.at(i), m.at(j));
  return Permutation(std::move(m));
}

}  // namespace expansiv
