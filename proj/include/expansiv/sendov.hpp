#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "expansiv/polynomial.hpp"
#include "expansiv/roots.hpp"

namespace expansiv {

inline constexpr double kDefaultSendovTolerance = 1e-9;

/// splitmix64 step; also used to derive per-sample seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256** seeded through splitmix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Seed for sample `index` of degree `degree`, independent of iteration order.
std::uint64_t derive_seed(std::uint64_t seed, unsigned degree, unsigned index);

/// Round to a rational with denominator 10¹².
Rational rationalize(double x);

/// Exact ∏(x − zᵢ) over ℚ. Non-real roots must come with their conjugates;
/// each pair becomes x² − 2·re·x + |z|².
RationalPoly poly_from_roots(std::span<const ComplexPoint> roots);

struct SampledPoly {
  RationalPoly poly;
  std::vector<ComplexPoint> roots;  // the rationalized roots actually used
};

/// Monic real polynomial with roots drawn uniformly in the disk |z| < δ:
/// conjugate pairs while two or more roots remain (each slot a pair with
/// probability 1/2), otherwise a real root uniform in (−δ, δ).
SampledPoly sample_poly_in_disk(unsigned degree, std::uint64_t seed, double delta);

enum class Verdict { StrictPass, TightPass, Fail };

std::string_view to_string(Verdict v);

struct RootDistance {
  ComplexPoint root;
  ComplexPoint nearest;
  double distance;
};

struct SendovReport {
  unsigned order = 1;  // derivative whose zeros are the targets
  std::vector<RootDistance> per_root;
  double max_min_distance = 0.0;
  Verdict verdict = Verdict::StrictPass;
  double radius = 1.0;
  double tolerance = kDefaultSendovTolerance;
  bool repeated_roots = false;

  bool pass() const { return verdict != Verdict::Fail; }
};

/// Distance from each distinct zero of f to the nearest zero of f′.
/// Throws Error(BadDegree) for deg f < 2 and Error(RootOutsideDisk) when a
/// zero lies beyond radius + tol.
SendovReport sendov_check(const RationalPoly& f, double radius = 1.0, double tol = kDefaultSendovTolerance,
                          const SolverOptions& options = {});

/// One report per order k = 1 … deg f − 1, against the zeros of f⁽ᵏ⁾.
std::vector<SendovReport> higher_order_check(const RationalPoly& f, double radius = 1.0,
                                             double tol = kDefaultSendovTolerance, const SolverOptions& options = {});

struct CoboundaryDistance {
  ComplexPoint root;        // b, giving the co-boundary point b·(1, …, 1)
  double nearest_any;       // to the nearest point of B¹
  double nearest_diagonal;  // to the nearest c·(1, …, 1) in B¹
  double scalar_distance;   // min |b − c| over zeros c of f′
  bool id_criterion;        // every coordinate of b·Sₑ − S_a within 1 + tol
};

struct TupleLanguageReport {
  std::size_t copies = 0;
  double mass_phase0 = 0.0;
  bool hypothesis_held = false;  // H(S⁰) < 1
  std::uint64_t phase0_count = 0;
  std::uint64_t phase1_count = 0;
  std::vector<CoboundaryDistance> per_root;
  double max_nearest_any = 0.0;
  double max_nearest_diagonal = 0.0;
};

/// The restated conjecture on S = (f, …, f). `copies` defaults to deg f + 1.
/// Throws Error(EmptyBoundary) when f′ has no zeros.
TupleLanguageReport tuple_language_check(const RationalPoly& f, double tol = kDefaultSendovTolerance,
                                         std::optional<std::size_t> copies = std::nullopt,
                                         const SolverOptions& options = {});

/// Euclidean distance from z to the convex hull of `points` (0 inside).
double hull_distance(ComplexPoint z, std::span<const ComplexPoint> points);

struct CorpusConfig {
  std::vector<unsigned> degrees;
  unsigned count = 1;
  std::uint64_t seed = 0;
  double delta = 0.99;
  double radius = 1.0;
  double tolerance = kDefaultSendovTolerance;
  bool higher_order = false;
};

struct CorpusSample {
  unsigned degree;
  unsigned sample;
  double max_min_distance;
  Verdict verdict;
  double mass_phase0;
  bool hypothesis_flag;
  bool repeated_roots;
  double recovery_error;        // constructed vs re-solved roots
  double gauss_lucas_distance;  // worst critical point to hull of zeros
  std::optional<bool> higher_order_pass;
};

inline constexpr std::size_t kHistogramBuckets = 20;
inline constexpr double kHistogramWidth = 0.1;

struct CorpusReport {
  CorpusConfig config;
  std::vector<CorpusSample> samples;  // sorted by (degree, sample)
  std::size_t violations = 0;
  double max_of_min_distances = 0.0;
  std::array<std::uint64_t, kHistogramBuckets> histogram{};  // last bucket is open-ended
  double max_recovery_error = 0.0;
  double max_gauss_lucas_distance = 0.0;
};

/// Throws Error(InvalidArgument) for count = 0 or an empty degree list.
CorpusReport corpus_run(const CorpusConfig& config, const SolverOptions& options = {});

}  // namespace expansiv
