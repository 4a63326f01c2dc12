#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "expansiv/roots.hpp"
#include "expansiv/tuple.hpp"

namespace expansiv {

/// (a₁, …, aₙ): coordinate i is a zero of entry i of a phase tuple.
using BoundaryPoint = Eigen::VectorXcd;

inline constexpr std::size_t kDefaultBoundaryCap = 100000;
inline constexpr double kDefaultMatchTolerance = 1e-8;

/// Finite boundary of one expansion phase, realized as the Cartesian product
/// of the per-entry root sets and enumerated lexicographically (last
/// coordinate fastest). Points are distinct because each root set is.
struct BoundarySet {
  unsigned phase = 0;
  std::size_t dimension = 0;
  std::vector<BoundaryPoint> points;
  std::vector<RootSet> per_entry_roots;
  bool truncated = false;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  /// Π |rootsᵢ|, the untruncated size (saturates at UINT64_MAX).
  std::uint64_t full_size() const;
};

/// Boundary of S^phase. A nonzero constant entry gives the empty set; a zero
/// entry throws Error(ZeroEntry) since every point of ℂ would qualify.
BoundarySet boundary_set(const PolyTuple& s, unsigned phase, std::size_t cap = kDefaultBoundaryCap,
                         const SolverOptions& options = {});

/// Same, for an already expanded tuple.
BoundarySet product_boundary(const PolyTuple& phase_tuple, unsigned phase_label, std::size_t cap = kDefaultBoundaryCap,
                             const SolverOptions& options = {});

/// {aᵢ·(1, …, 1)}, deduplicated within tol.
std::vector<BoundaryPoint> coboundary(const BoundaryPoint& point, double tol = kDefaultMatchTolerance);

/// Σ ‖p‖ over the set. For a truncated set this is a lower bound.
double mass_of(const BoundarySet& boundary);

/// Mass of the boundary of (f, …, f) with `copies` entries, given the distinct
/// roots of f, without enumerating the product: points are grouped by the
/// multiset of roots they use, weighted by the multinomial count.
double diagonal_mass(std::span<const ComplexPoint> roots, std::size_t copies);

struct Metric {
  double mass;
  double speed;
  double momentum;  // speed × mass
};

struct PhaseMember {
  PolyTuple tuple;
  unsigned phase;
};

struct MemberMetrics {
  Metric metric;
  std::optional<double> index;  // Σ M / M(member); empty when M(member) = 0
  bool infinite_index = false;
  bool mass_lower_bound = false;
};

/// Metric of each member and its index within the collection.
/// Throws Error(UndefinedSpeed) when a member's phase has degree 0.
std::vector<MemberMetrics> momentum_and_index(std::span<const PhaseMember> collection,
                                              std::size_t cap = kDefaultBoundaryCap,
                                              const SolverOptions& options = {});

bool contains_point(const BoundarySet& boundary, const BoundaryPoint& point, double tol = kDefaultMatchTolerance);

/// Every point of A lies in B (within tol) and |A| < |B|.
bool is_embedding(const BoundarySet& a, const BoundarySet& b, double tol = kDefaultMatchTolerance);

struct IsomorphismResult {
  bool isomorphic;   // equal masses within tol·(1 + mass(B))
  bool deformation;  // isomorphic and |A| > |B|
};

IsomorphismResult isomorphism_and_deformation(const BoundarySet& a, const BoundarySet& b,
                                              double tol = kDefaultMatchTolerance);

struct Overlap {
  std::vector<BoundaryPoint> region;
  double density_a;
  double density_b;
};

Overlap overlap_densities(const BoundarySet& a, const BoundarySet& b, double tol = kDefaultMatchTolerance);

/// Each point of B equals m·(some point of A) for a natural m ≤ max_multiplier.
bool associate_check(const BoundarySet& a, const BoundarySet& b, double tol, unsigned max_multiplier);

enum class Region { OnBoundary, InteriorUpper, InteriorLower, ExteriorUpper, ExteriorLower, Unclassified };

struct Classification {
  Region region;
  std::vector<std::size_t> neighbourhood;  // indices b with ‖P − b‖ < ε
  bool identifier_weak;                    // min |Pᵢ| ≤ 1
};

/// Interior/exterior position of P against B. "For most" means a strict
/// majority of boundary points.
Classification classify_point(const BoundaryPoint& point, const BoundarySet& boundary, double epsilon,
                              double match_tol = kDefaultMatchTolerance);

/// `images[i]` is Λ(pointᵢ). Stable iff norms are kept within tol·(1 + ‖p‖).
/// Throws Error(NotARotation) when an image is not a boundary point.
bool rotation_stability(std::span<const BoundaryPoint> images, const BoundarySet& boundary, double tol,
                        double match_tol = kDefaultMatchTolerance);

/// For each m < phases, every point of B^m has a point of B^{m+1} within ε.
bool is_compact(const PolyTuple& s, double epsilon, unsigned phases, std::size_t cap = kDefaultBoundaryCap,
                const SolverOptions& options = {});

/// Visiting order used by boundary_integral: ascending norm, norm ties
/// (relative 1e-12) ordered lexicographically by (re₁, im₁, re₂, …).
std::vector<std::size_t> boundary_integral_order(std::span<const BoundaryPoint> points);

struct BoundaryIntegral {
  ComplexPoint value;
  double modulus;
  bool truncated;
};

/// Sum over norm-increasing consecutive boundary points of the segment
/// integrals of the entries of S, collapsed onto the all-ones direction.
BoundaryIntegral boundary_integral(const PolyTuple& s, unsigned phase, std::size_t cap = kDefaultBoundaryCap,
                                   const SolverOptions& options = {});

enum class PhaseStatus { Ok, Truncated, EmptyBoundary, ZeroEntry };

struct PhaseMass {
  unsigned phase;
  PhaseStatus status;
  std::uint64_t count;
  double mass;
};

struct MassReport {
  std::vector<PhaseMass> phases;
  std::vector<unsigned> violations;  // m with H(S^m) ≤ H(S^{m+1}), both audited

  std::vector<double> per_phase_mass() const;
  std::vector<std::uint64_t> per_phase_count() const;
};

/// Masses of phases 0 … D−1 and every place where they fail to strictly
/// decrease. Evidence only: nothing here asserts the decrease.
MassReport regularity_audit(const PolyTuple& s, std::size_t cap = kDefaultBoundaryCap,
                            const SolverOptions& options = {});

struct FreePoint {
  ComplexPoint coordinate;
  Eigen::VectorXcd value;  // S^phase evaluated at the coordinate
  double norm;
};

struct FreePointReport {
  std::vector<FreePoint> points;
  bool distinct_coordinates;
  bool within_claim_range;  // phase < degree of expansion
  bool counterexample;      // a zero norm where positivity was claimed
};

/// Throws Error(NotOnBoundary) when a coordinate is not a zero of its entry.
FreePointReport free_points(const PolyTuple& s, unsigned phase, const BoundaryPoint& point);

}  // namespace expansiv
