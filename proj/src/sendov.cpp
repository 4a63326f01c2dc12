#include "expansiv/sendov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "expansiv/boundary.hpp"
#include "expansiv/errors.hpp"
#include "expansiv/expansion.hpp"

namespace expansiv {

namespace {

constexpr long kRationalScale = 1000000000000L;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void require_degree(const RationalPoly& f) {
  const auto d = f.degree();
  if (!d || *d < 2) throw Error(ErrorKind::BadDegree, "polynomial degree must be at least 2, got " + to_string(f));
}

Verdict judge(double max_min, double radius, double tol) {
  if (max_min > radius + tol) return Verdict::Fail;
  if (max_min >= radius - tol) return Verdict::TightPass;
  return Verdict::StrictPass;
}

SendovReport distance_report(const RootSet& zeros, const RootSet& targets, unsigned order, double radius, double tol) {
  SendovReport r;
  r.order = order;
  r.radius = radius;
  r.tolerance = tol;
  r.repeated_roots = zeros.has_repeated();
  for (const auto& b : zeros.roots) {
    RootDistance d{b, b, std::numeric_limits<double>::infinity()};
    for (const auto& c : targets.roots) {
      const double dist = std::abs(b - c);
      if (dist < d.distance) d = {b, c, dist};
    }
    r.max_min_distance = std::max(r.max_min_distance, d.distance);
    r.per_root.push_back(d);
  }
  r.verdict = judge(r.max_min_distance, radius, tol);
  return r;
}

RootSet zeros_in_disk(const RationalPoly& f, double radius, double tol, const SolverOptions& options) {
  require_degree(f);
  RootSet zeros = roots_all(f, options);
  for (const auto& b : zeros.roots) {
    if (std::abs(b) > radius + tol) {
      throw Error(ErrorKind::RootOutsideDisk, "zero (" + std::to_string(b.real()) + ", " + std::to_string(b.imag()) +
                                                  ") of " + to_string(f) + " lies outside radius " +
                                                  std::to_string(radius));
    }
  }
  return zeros;
}

double cross(ComplexPoint o, ComplexPoint a, ComplexPoint b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(ComplexPoint z, ComplexPoint a, ComplexPoint b) {
  const ComplexPoint ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, unsigned degree, unsigned index) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(degree) + 1));
  std::uint64_t mixed = splitmix64(state);
  mixed ^= 0x8CB92BA72F3D8DD7ULL * (static_cast<std::uint64_t>(index) + 1);
  return splitmix64(mixed);
}

Rational rationalize(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "cannot rationalize a non-finite value");
  return Rational(static_cast<long>(std::llround(x * static_cast<double>(kRationalScale))), kRationalScale);
}

RationalPoly poly_from_roots(std::span<const ComplexPoint> roots) {
  using Pair = std::pair<Rational, Rational>;
  std::vector<Pair> upper;
  std::vector<Pair> lower;
  RationalPoly out = RationalPoly::constant(Rational(1));
  for (const auto& z : roots) {
    const Rational re = rationalize(z.real());
    const Rational im = rationalize(z.imag());
    if (im.is_zero()) {
      out = out * RationalPoly{-re, Rational(1)};
    } else if (im.sign() > 0) {
      upper.emplace_back(re, im);
      out = out * RationalPoly{re * re + im * im, Rational(-2) * re, Rational(1)};
    } else {
      lower.emplace_back(re, -im);
    }
  }
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  if (upper != lower) throw Error(ErrorKind::InvalidArgument, "non-real roots must come in conjugate pairs");
  return out;
}

SampledPoly sample_poly_in_disk(unsigned degree, std::uint64_t seed, double delta) {
  if (degree < 2) throw Error(ErrorKind::BadDegree, "sample degree must be at least 2, got " + std::to_string(degree));
  if (!(delta > 0.0 && delta <= 1.0)) throw Error(ErrorKind::InvalidArgument, "delta must lie in (0, 1]");
  Xoshiro256 rng(seed);
  std::vector<ComplexPoint> roots;
  roots.reserve(degree);
  while (roots.size() < degree) {
    const std::size_t left = degree - roots.size();
    if (left >= 2 && rng.uniform() < 0.5) {
      const double r = delta * std::sqrt(rng.uniform());
      const double theta = std::numbers::pi * rng.uniform();
      const ComplexPoint z(rationalize(r * std::cos(theta)).to_double(), rationalize(r * std::sin(theta)).to_double());
      roots.push_back(z);
      roots.push_back(std::conj(z));
    } else {
      roots.emplace_back(rationalize(delta * (2.0 * rng.uniform() - 1.0)).to_double(), 0.0);
    }
  }
  return {poly_from_roots(roots), std::move(roots)};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictPass: return "strict_pass";
    case Verdict::TightPass: return "tight_pass";
    case Verdict::Fail: return "fail";
  }
  return "fail";
}

SendovReport sendov_check(const RationalPoly& f, double radius, double tol, const SolverOptions& options) {
  const RootSet zeros = zeros_in_disk(f, radius, tol, options);
  return distance_report(zeros, roots_all(derivative(f), options), 1, radius, tol);
}

std::vector<SendovReport> higher_order_check(const RationalPoly& f, double radius, double tol,
                                             const SolverOptions& options) {
  const RootSet zeros = zeros_in_disk(f, radius, tol, options);
  std::vector<SendovReport> out;
  const auto degree = static_cast<unsigned>(*f.degree());
  for (unsigned k = 1; k < degree; ++k) {
    out.push_back(distance_report(zeros, roots_all(derivative(f, k), options), k, radius, tol));
  }
  return out;
}

TupleLanguageReport tuple_language_check(const RationalPoly& f, double tol, std::optional<std::size_t> copies,
                                         const SolverOptions& options) {
  require_degree(f);
  TupleLanguageReport out;
  out.copies = copies.value_or(*f.degree() + 1);
  if (out.copies < 2) throw Error(ErrorKind::InvalidArgument, "the tuple needs at least two copies");

  const RootSet zeros = roots_all(f, options);
  const RootSet critical = roots_all(derivative(f), options);
  if (critical.empty()) throw Error(ErrorKind::EmptyBoundary, "the first phase boundary is empty");

  out.mass_phase0 = diagonal_mass(zeros.roots, out.copies);
  out.hypothesis_held = out.mass_phase0 < 1.0;
  out.phase0_count = saturating_pow(zeros.size(), out.copies);
  out.phase1_count = saturating_pow(critical.size(), out.copies);

  // Explicit B¹ when it is small enough to enumerate.
  std::optional<BoundarySet> phase1;
  if (out.phase1_count <= kDefaultBoundaryCap) {
    const PolyTuple s(std::vector<RationalPoly>(out.copies, f));
    phase1 = boundary_set(s, 1, kDefaultBoundaryCap, options);
  }

  const double root_n = std::sqrt(static_cast<double>(out.copies));
  for (const auto& b : zeros.roots) {
    CoboundaryDistance d{b, 0.0, 0.0, std::numeric_limits<double>::infinity(), false};
    for (const auto& c : critical.roots) d.scalar_distance = std::min(d.scalar_distance, std::abs(b - c));
    d.nearest_diagonal = root_n * d.scalar_distance;

    if (phase1) {
      const BoundaryPoint co = BoundaryPoint::Constant(static_cast<Eigen::Index>(out.copies), b);
      d.nearest_any = std::numeric_limits<double>::infinity();
      for (const auto& p : phase1->points) d.nearest_any = std::min(d.nearest_any, (co - p).norm());
    } else {
      // B¹ is a product, so the nearest point minimizes each coordinate separately.
      d.nearest_any = root_n * d.scalar_distance;
    }
    d.id_criterion = d.scalar_distance <= 1.0 + tol;
    out.max_nearest_any = std::max(out.max_nearest_any, d.nearest_any);
    out.max_nearest_diagonal = std::max(out.max_nearest_diagonal, d.nearest_diagonal);
    out.per_root.push_back(d);
  }
  return out;
}

double hull_distance(ComplexPoint z, std::span<const ComplexPoint> points) {
  if (points.empty()) return std::numeric_limits<double>::infinity();
  std::vector<ComplexPoint> p(points.begin(), points.end());
  auto less = [](ComplexPoint a, ComplexPoint b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(p.begin(), p.end(), less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() == 1) return std::abs(z - p[0]);

  // Andrew's monotone chain, counter-clockwise, collinear points dropped.
  std::vector<ComplexPoint> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i - 1]) <= 0) --k;
    hull[k++] = p[i - 1];
  }
  hull.resize(k - 1);

  double best = std::numeric_limits<double>::infinity();
  bool inside = hull.size() >= 3;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const ComplexPoint a = hull[i];
    const ComplexPoint b = hull[(i + 1) % hull.size()];
    best = std::min(best, segment_distance(z, a, b));
    if (cross(a, b, z) < 0) inside = false;
  }
  return inside ? 0.0 : best;
}

CorpusReport corpus_run(const CorpusConfig& config, const SolverOptions& options) {
  if (config.count == 0) throw Error(ErrorKind::InvalidArgument, "count must be at least 1");
  if (config.degrees.empty()) throw Error(ErrorKind::InvalidArgument, "no degrees given");

  CorpusReport report;
  report.config = config;
  std::vector<unsigned> degrees = config.degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  report.config.degrees = degrees;

  for (unsigned degree : degrees) {
    for (unsigned index = 0; index < config.count; ++index) {
      const SampledPoly sp = sample_poly_in_disk(degree, derive_seed(config.seed, degree, index), config.delta);
      const SendovReport sr = sendov_check(sp.poly, config.radius, config.tolerance, options);
      const RootSet zeros = roots_all(sp.poly, options);
      const RootSet critical = roots_all(derivative(sp.poly), options);

      CorpusSample s{degree, index, sr.max_min_distance, sr.verdict, 0.0, false, sr.repeated_roots, 0.0, 0.0, {}};
      s.mass_phase0 = diagonal_mass(zeros.roots, degree + 1);
      s.hypothesis_flag = s.mass_phase0 < 1.0;
      for (const auto& z : sp.roots) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : zeros.roots) best = std::min(best, std::abs(z - r));
        s.recovery_error = std::max(s.recovery_error, best);
      }
      for (const auto& c : critical.roots) {
        s.gauss_lucas_distance = std::max(s.gauss_lucas_distance, hull_distance(c, zeros.roots));
      }
      if (config.higher_order) {
        const auto reports = higher_order_check(sp.poly, config.radius, config.tolerance, options);
        s.higher_order_pass =
            std::all_of(reports.begin(), reports.end(), [](const SendovReport& r) { return r.pass(); });
      }

      if (s.verdict == Verdict::Fail) ++report.violations;
      report.max_of_min_distances = std::max(report.max_of_min_distances, s.max_min_distance);
      const auto bucket = std::min(kHistogramBuckets - 1, static_cast<std::size_t>(s.max_min_distance / kHistogramWidth));
      ++report.histogram[bucket];
      report.max_recovery_error = std::max(report.max_recovery_error, s.recovery_error);
      report.max_gauss_lucas_distance = std::max(report.max_gauss_lucas_distance, s.gauss_lucas_distance);
      report.samples.push_back(s);
    }
  }
  return report;
}

}  // namespace expansiv
