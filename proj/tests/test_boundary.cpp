#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "expansiv/boundary.hpp"
#include "expansiv/errors.hpp"
#include "expansiv/expansion.hpp"
#include "oracles.hpp"

using namespace expansiv;

namespace {

const double kSqrt3 = std::sqrt(3.0);

PolyTuple cube() {  // (x² − 1, x² − 1, x² − 1)
  return PolyTuple{make_poly({-1, 0, 1}), make_poly({-1, 0, 1}), make_poly({-1, 0, 1})};
}

PolyTuple square() {  // (x² − x, x² − x)
  return PolyTuple{make_poly({0, -1, 1}), make_poly({0, -1, 1})};
}

PolyTuple worked() {
  return PolyTuple{make_poly({0, 0, 1, 0, 1}), make_poly({0, 0, 0, -1, 0, 1}), make_poly({1, 0, 1})};
}

BoundaryPoint pt(std::initializer_list<ComplexPoint> c) {
  BoundaryPoint p(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (auto z : c) p[i++] = z;
  return p;
}

BoundarySet set_of(std::initializer_list<BoundaryPoint> points) {
  BoundarySet b;
  b.points.assign(points.begin(), points.end());
  b.dimension = b.points.empty() ? 0 : static_cast<std::size_t>(b.points.front().size());
  return b;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(BoundarySet, SquareIsLexicographicProduct) {
  const BoundarySet b = boundary_set(square(), 0);
  ASSERT_EQ(b.size(), 4u);
  const double want[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(std::abs(b.points[k][0] - want[k][0]), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(b.points[k][1] - want[k][1]), 0.0, 1e-14);
  }
  EXPECT_FALSE(b.truncated);
}

TEST(BoundarySet, ConstantEntryGivesEmptySet) {
  EXPECT_TRUE(boundary_set(PolyTuple{make_poly({0, 0, 1}), make_poly({0, -3}), make_poly({2})}, 0).empty());
}

TEST(BoundarySet, WorkedExampleFirstPhaseHas48Points) {
  EXPECT_EQ(boundary_set(worked(), 1).size(), 48u);
}

TEST(BoundarySet, ZeroEntryIsAnError) {
  EXPECT_EQ(kind_of([] { (void)boundary_set(PolyTuple{make_poly({0, 1}), RationalPoly()}, 0); }), ErrorKind::ZeroEntry);
}

TEST(BoundarySet, CapTruncates) {
  const BoundarySet b = boundary_set(worked(), 1, 10);
  EXPECT_EQ(b.size(), 10u);
  EXPECT_TRUE(b.truncated);
  EXPECT_EQ(b.full_size(), 48u);
  const BoundarySet exact = boundary_set(worked(), 1, 48);
  EXPECT_FALSE(exact.truncated);
}

TEST(BoundarySet, PointsSatisfyTheirEquations) {
  oracle::Gen gen(51);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyTuple s = gen.tuple(2, 3, 5);
    const unsigned d = rank_and_degree(s).degree;
    for (unsigned m = 0; m < d; ++m) {
      const PolyTuple t = expand_phase(s, m);
      if (std::any_of(t.entries().begin(), t.entries().end(), [](const RationalPoly& p) { return p.is_zero(); })) continue;
      const BoundarySet b = product_boundary(t, m, 2000);
      for (const auto& p : b.points) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          const auto z = p[static_cast<Eigen::Index>(i)];
          double s = 0.0;
          double power = 1.0;
          for (const auto& c : t[i].coeffs()) {
            s += std::abs(c.to_double()) * power;
            power *= std::abs(z);
          }
          const double contract = b.per_entry_roots[i].tolerance * (1.0 + max_abs_coeff(t[i]).to_double());
          EXPECT_LE(std::abs(oracle::eval(oracle::from(t[i]), z)), std::max(contract, 1e3 * 2.2e-16 * s) * 1.0001);
        }
      }
    }
  }
}

TEST(BoundarySet, CountWithinDegreeProductAndTopDegreeDrops) {
  oracle::Gen gen(53);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyTuple s = gen.tuple(2, 4, 5);
    const unsigned d = rank_and_degree(s).degree;
    for (unsigned m = 0; m < d; ++m) {
      const PolyTuple t = expand_phase(s, m);
      EXPECT_EQ(*t.max_degree(), d - m);
      if (std::any_of(t.entries().begin(), t.entries().end(), [](const RationalPoly& p) { return p.is_zero(); })) continue;
      std::uint64_t bound = 1;
      for (const auto& p : t.entries()) bound *= *p.degree();
      EXPECT_LE(boundary_set(s, m, 5000).full_size(), bound);
    }
  }
}

TEST(BoundarySet, DegreeProductCanGrowBetweenPhases) {
  // Phase 1 degrees (1, 4, 4), phase 2 degrees (3, 3, 3).
  const PolyTuple s{make_poly({0, 1, 0, 0, 0, 1}), make_poly({0, 0, 1}), make_poly({1})};
  EXPECT_EQ(boundary_set(s, 1).size(), 16u);
  EXPECT_EQ(boundary_set(s, 2).size(), 27u);
}

TEST(BoundarySet, ConstantShiftGivesSameLaterBoundaries) {
  oracle::Gen gen(57);
  for (int trial = 0; trial < 80; ++trial) {
    const PolyTuple s = gen.tuple(2, 3, 5);
    std::vector<Rational> shift;
    for (std::size_t i = 0; i < s.size(); ++i) shift.push_back(gen.rational());
    const PolyTuple t = s + PolyTuple::constants(shift);
    const unsigned d = rank_and_degree(s).degree;
    for (unsigned m = 1; m < d; ++m) {
      const PolyTuple phase = expand_phase(s, m);
      if (std::any_of(phase.entries().begin(), phase.entries().end(), [](const RationalPoly& p) { return p.is_zero(); })) continue;
      const BoundarySet a = boundary_set(s, m, 5000);
      const BoundarySet b = boundary_set(t, m, 5000);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LE((a.points[k] - b.points[k]).norm(), 1e-8);
    }
  }
}

TEST(Coboundary, Examples) {
  const auto a = coboundary(pt({1, -1, 1}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], pt({1, 1, 1}));
  EXPECT_EQ(a[1], pt({-1, -1, -1}));
  EXPECT_EQ(coboundary(pt({0, 0})).size(), 1u);
  const auto c = coboundary(pt({2, 3}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1], pt({3, 3}));
}

TEST(Mass, CubeAndItsFirstPhase) {
  EXPECT_NEAR(mass_of(boundary_set(cube(), 0)), 8 * kSqrt3, 1e-12);
  const BoundarySet one = boundary_set(cube(), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(mass_of(one), 0.0, 1e-15);
  EXPECT_EQ(mass_of(BoundarySet{}), 0.0);
}

TEST(Mass, DiagonalShortcutMatchesBruteForce) {
  oracle::Gen gen(59);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n_roots = static_cast<std::size_t>(gen.integer(1, 5));
    const auto copies = static_cast<std::size_t>(gen.integer(1, 5));
    std::vector<ComplexPoint> roots;
    for (std::size_t j = 0; j < n_roots; ++j) roots.emplace_back(gen.real(-2, 2), gen.real(-2, 2));
    const std::vector<std::vector<std::complex<double>>> per_entry(copies, roots);
    const double brute = oracle::brute_mass(per_entry);
    EXPECT_NEAR(diagonal_mass(roots, copies), brute, 1e-10 * (1 + brute));
  }
}

TEST(Metrics, CubeMomentumIs96) {
  const PhaseMember m{cube(), 0};
  const auto out = momentum_and_index(std::span<const PhaseMember>(&m, 1));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(out[0].metric.speed, 4 * kSqrt3, 1e-12);
  EXPECT_NEAR(out[0].metric.mass, 8 * kSqrt3, 1e-12);
  EXPECT_NEAR(out[0].metric.momentum, 96.0, 1e-10);
  EXPECT_DOUBLE_EQ(*out[0].index, 1.0);
}

TEST(Metrics, EmptyBoundaryMemberHasInfiniteIndex) {
  const std::vector<PhaseMember> members{{cube(), 0},
                                         {PolyTuple{make_poly({0, 0, 1}), make_poly({0, -3}), make_poly({2})}, 0}};
  const auto out = momentum_and_index(members);
  EXPECT_DOUBLE_EQ(*out[0].index, 1.0);
  EXPECT_EQ(out[1].metric.momentum, 0.0);
  EXPECT_TRUE(out[1].infinite_index);
  EXPECT_FALSE(out[1].index.has_value());
}

TEST(Metrics, PhaseAtDegreeHasNoSpeed) {
  const std::vector<PhaseMember> members{{cube(), 2}};
  EXPECT_EQ(kind_of([&] { (void)momentum_and_index(members); }), ErrorKind::UndefinedSpeed);
}

TEST(SetRelations, Embedding) {
  const auto origin = pt({0, 0, 0});
  const auto ones = pt({1, 1, 1});
  EXPECT_TRUE(is_embedding(set_of({origin}), set_of({origin, ones})));
  EXPECT_FALSE(is_embedding(set_of({origin, ones}), set_of({origin, ones})));
  EXPECT_FALSE(is_embedding(boundary_set(cube(), 1), boundary_set(cube(), 0)));
  EXPECT_EQ(kind_of([&] { (void)is_embedding(set_of({pt({0, 0})}), set_of({origin})); }), ErrorKind::SizeMismatch);
}

TEST(SetRelations, EmbeddingImpliesSmallerMass) {
  oracle::Gen gen(61);
  for (int trial = 0; trial < 200; ++trial) {
    BoundarySet b;
    b.dimension = 2;
    const auto n = gen.integer(2, 6);
    for (long k = 0; k < n; ++k) b.points.push_back(pt({{gen.real(-3, 3), gen.real(-3, 3)}, {gen.real(-3, 3), 0.0}}));
    BoundarySet a;
    a.dimension = 2;
    for (const auto& p : b.points) {
      if (gen.integer(0, 1) == 1 && a.size() + 1 < b.size()) a.points.push_back(p);
    }
    if (is_embedding(a, b)) {
      EXPECT_LT(mass_of(a), mass_of(b));
    }
  }
}

TEST(SetRelations, IsomorphismAndDeformation) {
  const BoundarySet a = set_of({pt({1, 0}), pt({0, 1}), pt({-1, 0}), pt({0, -1})});
  const BoundarySet b = set_of({pt({2, 0}), pt({0, 2})});
  const auto same = isomorphism_and_deformation(a, a);
  EXPECT_TRUE(same.isomorphic);
  EXPECT_FALSE(same.deformation);
  const auto def = isomorphism_and_deformation(a, b);
  EXPECT_TRUE(def.isomorphic);
  EXPECT_TRUE(def.deformation);
  const auto none = isomorphism_and_deformation(set_of({pt({4, 0})}), set_of({pt({5, 0})}));
  EXPECT_FALSE(none.isomorphic);
  EXPECT_FALSE(none.deformation);
}

TEST(SetRelations, OverlapDensities) {
  const BoundarySet a = set_of({pt({1, 0}), pt({0, 1})});
  const BoundarySet b = set_of({pt({1, 0}), pt({2, 2}), pt({3, 3})});
  const Overlap o = overlap_densities(a, b);
  EXPECT_EQ(o.region.size(), 1u);
  EXPECT_DOUBLE_EQ(o.density_a, 0.5);
  EXPECT_DOUBLE_EQ(o.density_b, 1.0 / 3.0);
  const Overlap same = overlap_densities(b, b);
  EXPECT_DOUBLE_EQ(same.density_a, 1.0);
  EXPECT_DOUBLE_EQ(same.density_b, 1.0);
  const Overlap none = overlap_densities(a, set_of({pt({9, 9})}));
  EXPECT_TRUE(none.region.empty());
  EXPECT_EQ(none.density_a, 0.0);
  EXPECT_EQ(kind_of([&] { (void)overlap_densities(a, set_of({})); }), ErrorKind::EmptyBoundary);
}

TEST(SetRelations, OverlapDensitiesStayInUnitInterval) {
  oracle::Gen gen(67);
  for (int trial = 0; trial < 200; ++trial) {
    BoundarySet a;
    BoundarySet b;
    a.dimension = b.dimension = 1;
    // Boundary sets never repeat a point.
    auto draw = [&](BoundarySet& out) {
      std::vector<long> v;
      for (long k = gen.integer(1, 6); k > 0; --k) v.push_back(gen.integer(0, 4));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      for (long x : v) out.points.push_back(pt({{static_cast<double>(x), 0}}));
    };
    draw(a);
    draw(b);
    const Overlap o = overlap_densities(a, b);
    EXPECT_GE(o.density_a, 0.0);
    EXPECT_LE(o.density_a, 1.0);
    EXPECT_GE(o.density_b, 0.0);
    EXPECT_LE(o.density_b, 1.0);
  }
}

TEST(SetRelations, Associates) {
  EXPECT_TRUE(associate_check(set_of({pt({1, 1})}), set_of({pt({2, 2})}), 1e-8, 5));
  EXPECT_TRUE(associate_check(set_of({pt({1, 2})}), set_of({pt({2, 4})}), 1e-8, 5));
  EXPECT_FALSE(associate_check(set_of({pt({2, 2})}), set_of({pt({1, 1})}), 1e-8, 5));
  EXPECT_FALSE(associate_check(set_of({pt({1, 1})}), set_of({pt({7, 7})}), 1e-8, 5));
}

TEST(Classify, ExteriorInteriorAndIdentifier) {
  const BoundarySet b = set_of({pt({1, 0}), pt({2, 0}), pt({3, 0}), pt({4, 0}), pt({5, 0})});
  EXPECT_EQ(classify_point(pt({0.5, 0}), b, 0.1).region, Region::ExteriorLower);
  EXPECT_EQ(classify_point(pt({9, 0}), b, 0.1).region, Region::ExteriorUpper);
  EXPECT_EQ(classify_point(pt({3.5, 0}), b, 0.1).region, Region::InteriorUpper);  // above 60%
  EXPECT_EQ(classify_point(pt({2.5, 0}), b, 0.1).region, Region::InteriorLower);
  const auto c = classify_point(pt({2.05, 0}), b, 0.1);
  EXPECT_EQ(c.neighbourhood, std::vector<std::size_t>{1});
  EXPECT_TRUE(classify_point(pt({0, 0, 0}), set_of({pt({1, 1, 1})}), 0.1).identifier_weak);
  EXPECT_FALSE(classify_point(pt({2, 3}), set_of({pt({1, 1})}), 0.1).identifier_weak);
  EXPECT_EQ(kind_of([] { (void)classify_point(pt({0}), BoundarySet{}, 1.0); }), ErrorKind::EmptyBoundary);
}

TEST(Classify, BoundaryPointsAreOnTheBoundary) {
  oracle::Gen gen(71);
  for (int trial = 0; trial < 40; ++trial) {
    const PolyTuple s = gen.tuple(2, 3, 5);
    const PolyTuple t = expand_phase(s, 0);
    if (std::any_of(t.entries().begin(), t.entries().end(), [](const RationalPoly& p) { return p.is_zero(); })) continue;
    const BoundarySet b = boundary_set(s, 0, 500);
    for (const auto& p : b.points) EXPECT_EQ(classify_point(p, b, 0.5).region, Region::OnBoundary);
  }
}

TEST(Rotation, Stability) {
  const BoundarySet b = set_of({pt({1, 0}), pt({0, 1}), pt({2, 0})});
  std::vector<BoundaryPoint> identity = b.points;
  EXPECT_TRUE(rotation_stability(identity, b, 1e-6));
  std::vector<BoundaryPoint> equal_norm{pt({0, 1}), pt({1, 0}), pt({2, 0})};
  EXPECT_TRUE(rotation_stability(equal_norm, b, 1e-6));
  std::vector<BoundaryPoint> swap{pt({2, 0}), pt({0, 1}), pt({1, 0})};
  EXPECT_FALSE(rotation_stability(swap, b, 1e-6));
  std::vector<BoundaryPoint> outside{pt({7, 0}), pt({0, 1}), pt({1, 0})};
  EXPECT_EQ(kind_of([&] { (void)rotation_stability(outside, b, 1e-6); }), ErrorKind::NotARotation);
}

TEST(Compact, Examples) {
  EXPECT_TRUE(is_compact(cube(), 2.0, 1));
  EXPECT_FALSE(is_compact(cube(), 1.5, 1));
  const PolyTuple squares{make_poly({0, 0, 1}), make_poly({0, 0, 1})};
  EXPECT_TRUE(is_compact(squares, 1e-6, 1));
  EXPECT_THROW((void)is_compact(cube(), 2.0, 2), Error);
}

TEST(Integral, SquareIsMinusOneThird) {
  const BoundaryIntegral bi = boundary_integral(square(), 0);
  EXPECT_NEAR(bi.value.real(), -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(bi.value.imag(), 0.0, 1e-12);
  EXPECT_NEAR(bi.modulus, 1.0 / 3.0, 1e-12);
}

TEST(Integral, EmptyAndEqualNormBoundariesGiveZero) {
  const PolyTuple empty{make_poly({0, 0, 1}), make_poly({0, -3}), make_poly({2})};
  EXPECT_EQ(boundary_integral(empty, 0).modulus, 0.0);
  const PolyTuple equal{make_poly({-1, 0, 1}), make_poly({-1, 0, 1})};
  EXPECT_EQ(boundary_integral(equal, 0).modulus, 0.0);
}

TEST(Integral, ZeroEntryIsInfinite) {
  EXPECT_EQ(kind_of([] { (void)boundary_integral(PolyTuple{make_poly({0, 0, 1}), RationalPoly()}, 0); }),
            ErrorKind::InfiniteBoundary);
}

TEST(Integral, OrderAgreesWithIndependentSort) {
  oracle::Gen gen(73);
  for (int trial = 0; trial < 200; ++trial) {
    // Small integer grids produce many exact norm ties.
    std::vector<BoundaryPoint> points;
    for (long k = gen.integer(1, 12); k > 0; --k) {
      points.push_back(pt({{static_cast<double>(gen.integer(-2, 2)), static_cast<double>(gen.integer(-2, 2))},
                           {static_cast<double>(gen.integer(-2, 2)), 0.0}}));
    }
    std::vector<BoundaryPoint> shuffled = points;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());

    // Independent order: key = (squared norm as an exact integer, coordinates).
    auto key = [](const BoundaryPoint& p) {
      const auto sq = static_cast<long>(std::llround(p.squaredNorm()));
      return std::make_tuple(sq, p[0].real(), p[0].imag(), p[1].real(), p[1].imag());
    };
    std::vector<BoundaryPoint> expected = points;
    std::stable_sort(expected.begin(), expected.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

    for (const auto* input : {&points, &shuffled}) {
      const auto order = boundary_integral_order(*input);
      ASSERT_EQ(order.size(), expected.size());
      for (std::size_t k = 0; k < order.size(); ++k) EXPECT_EQ(key((*input)[order[k]]), key(expected[k]));
    }
  }
}

TEST(Audit, CubeMassesAndNoViolations) {
  const MassReport r = regularity_audit(cube());
  ASSERT_EQ(r.phases.size(), 2u);
  EXPECT_NEAR(r.phases[0].mass, 8 * kSqrt3, 1e-10);
  EXPECT_NEAR(r.phases[1].mass, 0.0, 1e-12);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Audit, WorkedExampleCoversPhasesZeroToFour) {
  const MassReport r = regularity_audit(worked());
  ASSERT_EQ(r.phases.size(), 5u);
  for (std::size_t k = 0; k < r.phases.size(); ++k) {
    EXPECT_EQ(r.phases[k].status, PhaseStatus::Ok);
    EXPECT_NEAR(r.phases[k].mass, mass_of(boundary_set(worked(), static_cast<unsigned>(k))), 1e-9);
  }
  EXPECT_EQ(r.phases[1].count, 48u);
  // Mass rises from phase 0 to phase 1: recorded as evidence, not thrown.
  EXPECT_EQ(r.violations, std::vector<unsigned>{0});
}

TEST(Audit, DiagonalShortcutMatchesEnumeration) {
  const PolyTuple s(std::vector<RationalPoly>(3, make_poly({-6, 1, 0, 1})));  // x³ + x − 6
  const MassReport r = regularity_audit(s);
  for (const auto& p : r.phases) {
    const BoundarySet b = boundary_set(s, p.phase);
    EXPECT_EQ(p.count, b.size());
    EXPECT_NEAR(p.mass, mass_of(b), 1e-9 * (1 + p.mass));
  }
}

TEST(Audit, ZeroEntryPhaseIsSkippedAndConstantTupleRejected) {
  const MassReport r = regularity_audit(PolyTuple{make_poly({0, 0, 1}), RationalPoly(), make_poly({1, 1})});
  EXPECT_EQ(r.phases[0].status, PhaseStatus::ZeroEntry);
  EXPECT_EQ(kind_of([] { (void)regularity_audit(PolyTuple{make_poly({1}), make_poly({2})}); }), ErrorKind::NonExpandable);
}

TEST(FreePoints, CubeCounterexampleIsFlagged) {
  const FreePointReport r = free_points(cube(), 0, pt({1, -1, 1}));
  ASSERT_EQ(r.points.size(), 3u);
  for (const auto& p : r.points) EXPECT_EQ(p.norm, 0.0);
  EXPECT_TRUE(r.distinct_coordinates);
  EXPECT_TRUE(r.within_claim_range);
  EXPECT_TRUE(r.counterexample);
}

TEST(FreePoints, WorkedExampleOriginEvaluatesToZero) {
  const FreePointReport r = free_points(worked(), 1, pt({0, 0, 0}));
  for (const auto& p : r.points) EXPECT_EQ(p.norm, 0.0);
  EXPECT_FALSE(r.distinct_coordinates);
  EXPECT_FALSE(r.counterexample);
}

TEST(FreePoints, OffBoundaryPointIsRejected) {
  EXPECT_EQ(kind_of([] { (void)free_points(cube(), 0, pt({1, 0.5, 1})); }), ErrorKind::NotOnBoundary);
}
