#include "expansiv/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "expansiv/errors.hpp"
#include "expansiv/expansion.hpp"

namespace expansiv {

namespace {

using ComplexLd = std::complex<long double>;

bool points_match(const BoundaryPoint& a, const BoundaryPoint& b, double tol) {
  return a.size() == b.size() && (a - b).norm() <= tol;
}

void require_same_dimension(const BoundarySet& a, const BoundarySet& b) {
  if (a.dimension != b.dimension) {
    throw Error(ErrorKind::SizeMismatch, "boundary sets of dimension " + std::to_string(a.dimension) + " and " +
                                             std::to_string(b.dimension));
  }
}

void require_nonempty(const BoundarySet& b, const char* what) {
  if (b.empty()) throw Error(ErrorKind::EmptyBoundary, what);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// All entries identical: the boundary is the n-fold power of one root set.
bool is_diagonal(const PolyTuple& t) {
  return t.size() >= 2 && std::all_of(t.entries().begin(), t.entries().end(),
                                      [&](const RationalPoly& p) { return p == t[0]; });
}

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(c);
}

struct PhaseMassValue {
  double mass = 0.0;
  std::uint64_t count = 0;
  bool truncated = false;
};

// Mass of an already expanded tuple; the caller has excluded zero entries.
PhaseMassValue phase_mass(const PolyTuple& phase_tuple, unsigned phase, std::size_t cap, const SolverOptions& options) {
  if (is_diagonal(phase_tuple)) {
    if (phase_tuple[0].is_constant()) return {};
    const RootSet r = roots_all(phase_tuple[0], options);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < phase_tuple.size(); ++i) count = saturating_mul(count, r.size());
    return {diagonal_mass(r.roots, phase_tuple.size()), count, false};
  }
  const BoundarySet b = product_boundary(phase_tuple, phase, cap, options);
  return {mass_of(b), b.full_size(), b.truncated};
}

bool has_zero_entry(const PolyTuple& t) {
  return std::any_of(t.entries().begin(), t.entries().end(), [](const RationalPoly& p) { return p.is_zero(); });
}

ComplexLd to_ld(ComplexPoint z) { return {z.real(), z.imag()}; }

}  // namespace

std::uint64_t BoundarySet::full_size() const {
  if (per_entry_roots.empty()) return 0;
  std::uint64_t n = 1;
  for (const auto& r : per_entry_roots) n = saturating_mul(n, r.size());
  return n;
}

BoundarySet product_boundary(const PolyTuple& phase_tuple, unsigned phase_label, std::size_t cap,
                             const SolverOptions& options) {
  if (cap < 1) throw Error(ErrorKind::InvalidArgument, "cap must be at least 1");
  BoundarySet out;
  out.phase = phase_label;
  out.dimension = phase_tuple.size();
  for (std::size_t i = 0; i < phase_tuple.size(); ++i) {
    if (phase_tuple[i].is_zero()) {
      throw Error(ErrorKind::ZeroEntry, "entry " + std::to_string(i) + " of phase " + std::to_string(phase_label) +
                                            " is the zero polynomial");
    }
  }
  out.per_entry_roots.reserve(phase_tuple.size());
  for (const auto& p : phase_tuple.entries()) out.per_entry_roots.push_back(roots_all(p, options));
  if (phase_tuple.size() == 0) return out;
  for (const auto& r : out.per_entry_roots) {
    if (r.empty()) return out;
  }

  // Odometer over root indices, last coordinate fastest.
  const std::size_t n = phase_tuple.size();
  std::vector<std::size_t> index(n, 0);
  while (true) {
    if (out.points.size() == cap) {
      out.truncated = out.full_size() > cap;
      break;
    }
    BoundaryPoint p(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) p[static_cast<Eigen::Index>(i)] = out.per_entry_roots[i].roots[index[i]];
    out.points.push_back(std::move(p));

    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++index[k] < out.per_entry_roots[k].size()) break;
      index[k] = 0;
      if (k == 0) return out;
    }
  }
  return out;
}

BoundarySet boundary_set(const PolyTuple& s, unsigned phase, std::size_t cap, const SolverOptions& options) {
  return product_boundary(expand_phase(s, phase), phase, cap, options);
}

std::vector<BoundaryPoint> coboundary(const BoundaryPoint& point, double tol) {
  std::vector<BoundaryPoint> out;
  for (Eigen::Index i = 0; i < point.size(); ++i) {
    BoundaryPoint c = BoundaryPoint::Constant(point.size(), point[i]);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const BoundaryPoint& q) { return points_match(q, c, tol); });
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

double mass_of(const BoundarySet& boundary) {
  double total = 0.0;
  for (const auto& p : boundary.points) total += p.norm();
  return total;
}

double diagonal_mass(std::span<const ComplexPoint> roots, std::size_t copies) {
  if (roots.empty() || copies == 0) return 0.0;
  std::vector<double> sq(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) sq[j] = std::norm(roots[j]);

  // Walk every composition c of `copies` into |roots| parts.
  double total = 0.0;
  std::vector<std::size_t> c(roots.size(), 0);
  auto visit = [&](auto&& self, std::size_t j, std::size_t left, double weight, double norm_sq) -> void {
    if (j + 1 == roots.size()) {
      total += weight * std::sqrt(norm_sq + static_cast<double>(left) * sq[j]);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      self(self, j + 1, left - k, weight * binomial(left, k), norm_sq + static_cast<double>(k) * sq[j]);
    }
  };
  visit(visit, 0, copies, 1.0, 0.0);
  return total;
}

std::vector<MemberMetrics> momentum_and_index(std::span<const PhaseMember> collection, std::size_t cap,
                                              const SolverOptions& options) {
  if (collection.empty()) throw Error(ErrorKind::InvalidArgument, "collection is empty");
  std::vector<MemberMetrics> out;
  out.reserve(collection.size());
  for (const auto& member : collection) {
    const auto [rank, degree] = rank_and_degree(member.tuple);
    if (member.phase >= degree) {
      throw Error(ErrorKind::UndefinedSpeed, "phase " + std::to_string(member.phase) +
                                                 " has degree of expansion 0 (D = " + std::to_string(degree) + ")");
    }
    const double speed = constant_tuple_norm(rank) / static_cast<double>(degree - member.phase);
    const PolyTuple phase_tuple = expand_phase(member.tuple, member.phase);
    if (has_zero_entry(phase_tuple)) {
      throw Error(ErrorKind::ZeroEntry, "phase " + std::to_string(member.phase) + " has a zero entry");
    }
    const PhaseMassValue h = phase_mass(phase_tuple, member.phase, cap, options);
    MemberMetrics m;
    m.metric = {h.mass, speed, speed * h.mass};
    m.mass_lower_bound = h.truncated;
    out.push_back(std::move(m));
  }
  double total = 0.0;
  for (const auto& m : out) total += m.metric.momentum;
  for (auto& m : out) {
    if (m.metric.momentum > 0.0) {
      m.index = total / m.metric.momentum;
    } else {
      m.infinite_index = true;
    }
  }
  return out;
}

bool contains_point(const BoundarySet& boundary, const BoundaryPoint& point, double tol) {
  return std::any_of(boundary.points.begin(), boundary.points.end(),
                     [&](const BoundaryPoint& q) { return points_match(q, point, tol); });
}

bool is_embedding(const BoundarySet& a, const BoundarySet& b, double tol) {
  require_same_dimension(a, b);
  if (a.size() >= b.size()) return false;
  return std::all_of(a.points.begin(), a.points.end(), [&](const BoundaryPoint& p) { return contains_point(b, p, tol); });
}

IsomorphismResult isomorphism_and_deformation(const BoundarySet& a, const BoundarySet& b, double tol) {
  const double ha = mass_of(a);
  const double hb = mass_of(b);
  const bool iso = std::abs(ha - hb) <= tol * (1.0 + hb);
  return {iso, iso && a.size() > b.size()};
}

Overlap overlap_densities(const BoundarySet& a, const BoundarySet& b, double tol) {
  require_nonempty(a, "overlap of an empty boundary");
  require_nonempty(b, "overlap with an empty boundary");
  require_same_dimension(a, b);
  Overlap out;
  for (const auto& p : a.points) {
    if (contains_point(b, p, tol)) out.region.push_back(p);
  }
  out.density_a = static_cast<double>(out.region.size()) / static_cast<double>(a.size());
  out.density_b = static_cast<double>(out.region.size()) / static_cast<double>(b.size());
  return out;
}

bool associate_check(const BoundarySet& a, const BoundarySet& b, double tol, unsigned max_multiplier) {
  if (max_multiplier < 1) throw Error(ErrorKind::InvalidArgument, "mMax must be at least 1");
  require_same_dimension(a, b);
  return std::all_of(b.points.begin(), b.points.end(), [&](const BoundaryPoint& q) {
    for (unsigned m = 1; m <= max_multiplier; ++m) {
      for (const auto& p : a.points) {
        if (points_match(q, static_cast<double>(m) * p, tol)) return true;
      }
    }
    return false;
  });
}

Classification classify_point(const BoundaryPoint& point, const BoundarySet& boundary, double epsilon,
                              double match_tol) {
  require_nonempty(boundary, "cannot classify against an empty boundary");
  Classification out{Region::Unclassified, {}, false};

  double min_coord = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < point.size(); ++i) min_coord = std::min(min_coord, std::abs(point[i]));
  out.identifier_weak = point.size() > 0 && min_coord <= 1.0;

  const double norm = point.norm();
  std::size_t below = 0;  // boundary points with ‖b‖ < ‖P‖
  std::size_t above = 0;
  bool on = false;
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    const auto& b = boundary.points[k];
    if (b.size() != point.size()) throw Error(ErrorKind::SizeMismatch, "point and boundary differ in dimension");
    const double d = (point - b).norm();
    if (d < epsilon) out.neighbourhood.push_back(k);
    if (d <= match_tol) on = true;
    const double bn = b.norm();
    if (bn < norm) ++below;
    if (bn > norm) ++above;
  }

  const std::size_t total = boundary.size();
  if (on) {
    out.region = Region::OnBoundary;
  } else if (below == total) {
    out.region = Region::ExteriorUpper;
  } else if (above == total) {
    out.region = Region::ExteriorLower;
  } else if (2 * below > total) {
    out.region = Region::InteriorUpper;
  } else if (2 * above > total) {
    out.region = Region::InteriorLower;
  }
  return out;
}

bool rotation_stability(std::span<const BoundaryPoint> images, const BoundarySet& boundary, double tol,
                        double match_tol) {
  require_nonempty(boundary, "rotation of an empty boundary");
  if (images.size() != boundary.size()) {
    throw Error(ErrorKind::NotARotation, "a rotation needs one image per boundary point");
  }
  bool stable = true;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!contains_point(boundary, images[k], match_tol)) {
      throw Error(ErrorKind::NotARotation, "image " + std::to_string(k) + " is not a boundary point");
    }
    const double n = boundary.points[k].norm();
    if (std::abs(images[k].norm() - n) > tol * (1.0 + n)) stable = false;
  }
  return stable;
}

bool is_compact(const PolyTuple& s, double epsilon, unsigned phases, std::size_t cap, const SolverOptions& options) {
  const auto [rank, degree] = rank_and_degree(s);
  if (degree == 0 || phases > degree - 1) {
    throw Error(ErrorKind::InvalidArgument, "phases must not exceed degree of expansion - 1 (D = " +
                                                std::to_string(degree) + ")");
  }
  if (phases == 0) return true;
  BoundarySet current = boundary_set(s, 0, cap, options);
  for (unsigned m = 0; m < phases; ++m) {
    BoundarySet next = boundary_set(s, m + 1, cap, options);
    require_nonempty(current, ("empty boundary at phase " + std::to_string(m)).c_str());
    require_nonempty(next, ("empty boundary at phase " + std::to_string(m + 1)).c_str());
    for (const auto& p : current.points) {
      const bool near = std::any_of(next.points.begin(), next.points.end(),
                                    [&](const BoundaryPoint& q) { return (p - q).norm() < epsilon; });
      if (!near) return false;
    }
    current = std::move(next);
  }
  return true;
}

std::vector<std::size_t> boundary_integral_order(std::span<const BoundaryPoint> points) {
  std::vector<double> norms(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) norms[k] = points[k].norm();
  auto lex_less = [&](std::size_t a, std::size_t b) {
    const auto& p = points[a];
    const auto& q = points[b];
    for (Eigen::Index i = 0; i < std::min(p.size(), q.size()); ++i) {
      if (p[i].real() != q[i].real()) return p[i].real() < q[i].real();
      if (p[i].imag() != q[i].imag()) return p[i].imag() < q[i].imag();
    }
    return p.size() < q.size();
  };

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (norms[a] != norms[b]) return norms[a] < norms[b];
    return lex_less(a, b);
  });

  // Chain near-equal norms into clusters and order each cluster lexicographically.
  std::size_t start = 0;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    if (k == order.size() || norms[order[k]] - norms[order[k - 1]] > 1e-12 * (1.0 + norms[order[k - 1]])) {
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(k),
                lex_less);
      start = k;
    }
  }
  return order;
}

BoundaryIntegral boundary_integral(const PolyTuple& s, unsigned phase, std::size_t cap, const SolverOptions& options) {
  const auto top = s.max_degree();
  if (!top || phase >= *top) {
    throw Error(ErrorKind::InvalidArgument, "phase must be below the largest entry degree");
  }
  const PolyTuple phase_tuple = expand_phase(s, phase);
  if (has_zero_entry(phase_tuple)) {
    throw Error(ErrorKind::InfiniteBoundary, "phase " + std::to_string(phase) + " has a zero entry");
  }
  const BoundarySet b = product_boundary(phase_tuple, phase, cap, options);

  std::vector<RationalPoly> primitives;
  for (const auto& g : s.entries()) primitives.push_back(antiderivative(g, Rational(0), Rational(0)));

  const auto order = boundary_integral_order(b.points);
  ComplexLd total = 0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto& lo = b.points[order[k]];
    const auto& hi = b.points[order[k + 1]];
    const double nl = lo.norm();
    if (hi.norm() - nl <= 1e-12 * (1.0 + nl)) continue;
    for (std::size_t i = 0; i < primitives.size(); ++i) {
      const auto e = static_cast<Eigen::Index>(i);
      total += evaluate(primitives[i], to_ld(hi[e])) - evaluate(primitives[i], to_ld(lo[e]));
    }
  }
  const ComplexPoint value(static_cast<double>(total.real()), static_cast<double>(total.imag()));
  return {value, std::abs(value), b.truncated};
}

std::vector<double> MassReport::per_phase_mass() const {
  std::vector<double> v;
  for (const auto& p : phases) v.push_back(p.mass);
  return v;
}

std::vector<std::uint64_t> MassReport::per_phase_count() const {
  std::vector<std::uint64_t> v;
  for (const auto& p : phases) v.push_back(p.count);
  return v;
}

MassReport regularity_audit(const PolyTuple& s, std::size_t cap, const SolverOptions& options) {
  if (s.size() < 2) throw Error(ErrorKind::TupleTooShort, "audit needs at least two entries");
  if (s.is_constant()) throw Error(ErrorKind::NonExpandable, "a constant tuple has no phases to audit");
  const ExpansionTrace trace = trace_expansion(s);

  MassReport report;
  for (unsigned m = 0; m < trace.degree; ++m) {
    const PolyTuple& t = trace.phases[m];
    PhaseMass pm{m, PhaseStatus::Ok, 0, 0.0};
    if (has_zero_entry(t)) {
      pm.status = PhaseStatus::ZeroEntry;
    } else {
      const PhaseMassValue h = phase_mass(t, m, cap, options);
      pm.mass = h.mass;
      pm.count = h.count;
      if (h.count == 0) {
        pm.status = PhaseStatus::EmptyBoundary;
      } else if (h.truncated) {
        pm.status = PhaseStatus::Truncated;
      }
    }
    report.phases.push_back(pm);
  }
  for (std::size_t k = 0; k + 1 < report.phases.size(); ++k) {
    const auto& a = report.phases[k];
    const auto& b = report.phases[k + 1];
    if (a.status == PhaseStatus::Ok && b.status == PhaseStatus::Ok && a.mass <= b.mass) report.violations.push_back(a.phase);
  }
  return report;
}

FreePointReport free_points(const PolyTuple& s, unsigned phase, const BoundaryPoint& point) {
  const PolyTuple t = expand_phase(s, phase);
  if (static_cast<std::size_t>(point.size()) != t.size()) {
    throw Error(ErrorKind::SizeMismatch, "point and tuple differ in length");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const ComplexPoint a = point[static_cast<Eigen::Index>(i)];
    const auto coeffs = t[i].coeffs();
    long double scale = 1;
    long double power = 1;
    for (const auto& c : coeffs) {
      scale += std::abs(c.to_long_double()) * power;
      power *= std::abs(to_ld(a));
    }
    const long double residual = std::abs(evaluate(t[i], to_ld(a)));
    if (t[i].is_zero() || residual > 1e-6L * scale) {
      throw Error(ErrorKind::NotOnBoundary, "coordinate " + std::to_string(i) + " is not a zero of entry " +
                                                std::to_string(i) + " at phase " + std::to_string(phase));
    }
  }

  FreePointReport out;
  out.distinct_coordinates = false;
  for (Eigen::Index i = 1; i < point.size(); ++i) {
    if (std::abs(point[i] - point[0]) > kDefaultMatchTolerance) out.distinct_coordinates = true;
  }
  const unsigned degree = rank_and_degree(s).degree;
  out.within_claim_range = phase < degree;
  out.counterexample = false;

  for (Eigen::Index i = 0; i < point.size(); ++i) {
    FreePoint fp{point[i], t.evaluate(point[i]), 0.0};
    fp.norm = fp.value.norm();
    if (fp.norm <= 1e-9 && out.distinct_coordinates && out.within_claim_range) out.counterexample = true;
    out.points.push_back(std::move(fp));
  }
  return out;
}

}  // namespace expansiv
