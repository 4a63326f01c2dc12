#include "expansiv/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "expansiv/errors.hpp"
#include "expansiv/schemas_embedded.hpp"

namespace expansiv::io {

namespace {

using Diagnostics = std::vector<Diagnostic>;

std::string root_or(const std::string& ptr) { return ptr.empty() ? "/" : ptr; }

void add(Diagnostics& d, const std::string& ptr, std::string message) {
  d.push_back({root_or(ptr), std::move(message)});
}

std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

void check_rational(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (!v.is_string()) {
    add(d, ptr, "expected a rational string such as \"3\" or \"-1/2\"");
    return;
  }
  try {
    (void)Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    add(d, ptr, e.what());
  }
}

bool require_object(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (v.is_object()) return true;
  add(d, ptr, "expected an object");
  return false;
}

const Json* require_key(const Json& v, std::string_view key, const std::string& ptr, Diagnostics& d) {
  const auto it = v.find(std::string(key));
  if (it == v.end()) {
    add(d, ptr, "missing required key \"" + std::string(key) + "\"");
    return nullptr;
  }
  return &*it;
}

const Json* require_array(const Json& v, std::string_view key, const std::string& ptr, Diagnostics& d,
                          bool nonempty) {
  const Json* a = require_key(v, key, ptr, d);
  if (!a) return nullptr;
  if (!a->is_array()) {
    add(d, child(ptr, key), "expected an array");
    return nullptr;
  }
  if (nonempty && a->empty()) {
    add(d, child(ptr, key), "expected at least one item");
    return nullptr;
  }
  return a;
}

void check_poly(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (!require_object(v, ptr, d)) return;
  const Json* coeffs = require_array(v, "coeffs", ptr, d, true);
  if (!coeffs) return;
  for (std::size_t i = 0; i < coeffs->size(); ++i) check_rational((*coeffs)[i], child(child(ptr, "coeffs"), i), d);
}

void check_tuple(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (!require_object(v, ptr, d)) return;
  const Json* entries = require_array(v, "entries", ptr, d, true);
  if (!entries) return;
  for (std::size_t i = 0; i < entries->size(); ++i) check_poly((*entries)[i], child(child(ptr, "entries"), i), d);
}

void check_complex(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    add(d, ptr, "expected a [re, im] pair of numbers");
  }
}

// Returns the point's dimension, 0 when invalid.
std::size_t check_point(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (!v.is_array() || v.empty()) {
    add(d, ptr, "expected a nonempty array of [re, im] pairs");
    return 0;
  }
  const std::size_t before = d.size();
  for (std::size_t i = 0; i < v.size(); ++i) check_complex(v[i], child(ptr, i), d);
  return d.size() == before ? v.size() : 0;
}

void check_nonnegative_integer(const Json& v, const std::string& ptr, Diagnostics& d) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
    add(d, ptr, "expected a nonnegative integer");
  }
}

void check_boundary(const Json& v, Diagnostics& d) {
  if (!require_object(v, "", d)) return;
  if (const Json* phase = require_key(v, "phase", "", d)) check_nonnegative_integer(*phase, "/phase", d);
  if (const Json* t = require_key(v, "truncated", "", d); t && !t->is_boolean()) add(d, "/truncated", "expected a boolean");
  const Json* points = require_array(v, "points", "", d, false);
  if (!points) return;
  std::size_t dim = 0;
  for (std::size_t k = 0; k < points->size(); ++k) {
    const std::string ptr = child(std::string("/points"), k);
    const std::size_t n = check_point((*points)[k], ptr, d);
    if (n == 0) continue;
    if (dim == 0) dim = n;
    if (n != dim) add(d, ptr, "point dimension differs from the first point");
  }
}

void check_recover(const Json& v, Diagnostics& d) {
  check_tuple(v, "", d);
  if (!v.is_object()) return;
  const Json* conditions = require_array(v, "conditions", "", d, false);
  if (!conditions) return;
  for (std::size_t k = 0; k < conditions->size(); ++k) {
    const std::string ptr = child(std::string("/conditions"), k);
    const Json& c = (*conditions)[k];
    if (!require_object(c, ptr, d)) continue;
    if (const Json* at = require_key(c, "at", ptr, d)) check_rational(*at, child(ptr, "at"), d);
    if (const Json* values = require_array(c, "values", ptr, d, false)) {
      for (std::size_t i = 0; i < values->size(); ++i) check_rational((*values)[i], child(child(ptr, "values"), i), d);
    }
  }
}

void check_classify(const Json& v, Diagnostics& d) {
  if (!require_object(v, "", d)) return;
  if (const Json* p = require_key(v, "point", "", d)) check_point(*p, "/point", d);
  if (const Json* t = require_key(v, "tuple", "", d)) check_tuple(*t, "/tuple", d);
}

void check_members(const Json& v, Diagnostics& d) {
  if (!require_object(v, "", d)) return;
  const Json* members = require_array(v, "members", "", d, true);
  if (!members) return;
  for (std::size_t k = 0; k < members->size(); ++k) {
    const std::string ptr = child(std::string("/members"), k);
    const Json& m = (*members)[k];
    if (!require_object(m, ptr, d)) continue;
    if (const Json* t = require_key(m, "tuple", ptr, d)) check_tuple(*t, child(ptr, "tuple"), d);
    if (const Json* p = require_key(m, "phase", ptr, d)) check_nonnegative_integer(*p, child(ptr, "phase"), d);
  }
}

void require_valid(const Json& doc, Schema schema) {
  const auto diagnostics = schema_validate(doc, schema);
  if (diagnostics.empty()) return;
  std::string message = std::string(schema_name(schema)) + " document is invalid";
  for (const auto& diag : diagnostics) message += "\n  " + diag.pointer + ": " + diag.message;
  throw Error(ErrorKind::ParseError, message);
}

RationalPoly decode_poly(const Json& v) {
  std::vector<Rational> coeffs;
  for (const auto& c : v.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
  return RationalPoly(std::move(coeffs));
}

PolyTuple decode_tuple(const Json& v) {
  std::vector<RationalPoly> entries;
  for (const auto& e : v.at("entries")) entries.push_back(decode_poly(e));
  return PolyTuple(std::move(entries));
}

BoundaryPoint decode_point(const Json& v) {
  BoundaryPoint p(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    p[static_cast<Eigen::Index>(i)] = ComplexPoint(v[i][0].get<double>(), v[i][1].get<double>());
  }
  return p;
}

Json optional_number(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  const double r = std::strtod(buffer, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format12(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", round12(x));
  return buffer;
}

std::string_view schema_name(Schema s) {
  switch (s) {
    case Schema::Poly: return "poly";
    case Schema::Tuple: return "tuple";
    case Schema::Boundary: return "boundary";
    case Schema::Recover: return "recover";
    case Schema::Classify: return "classify";
    case Schema::Members: return "members";
  }
  return "unknown";
}

std::string_view schema_text(Schema s) {
  switch (s) {
    case Schema::Poly: return schemas::kPoly;
    case Schema::Tuple: return schemas::kTuple;
    case Schema::Boundary: return schemas::kBoundary;
    case Schema::Recover: return schemas::kRecover;
    case Schema::Classify: return schemas::kClassify;
    case Schema::Members: return schemas::kMembers;
  }
  return {};
}

std::vector<Diagnostic> schema_validate(const Json& doc, Schema schema) {
  Diagnostics d;
  switch (schema) {
    case Schema::Poly: check_poly(doc, "", d); break;
    case Schema::Tuple: check_tuple(doc, "", d); break;
    case Schema::Boundary: check_boundary(doc, d); break;
    case Schema::Recover: check_recover(doc, d); break;
    case Schema::Classify: check_classify(doc, d); break;
    case Schema::Members: check_members(doc, d); break;
  }
  return d;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError,
                "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

RationalPoly poly_from_json(const Json& doc) {
  require_valid(doc, Schema::Poly);
  return decode_poly(doc);
}

PolyTuple tuple_from_json(const Json& doc) {
  require_valid(doc, Schema::Tuple);
  return decode_tuple(doc);
}

BoundaryPoint point_from_json(const Json& doc) {
  Diagnostics d;
  check_point(doc, "", d);
  if (!d.empty()) throw Error(ErrorKind::ParseError, d.front().pointer + ": " + d.front().message);
  return decode_point(doc);
}

BoundarySet boundary_from_json(const Json& doc) {
  require_valid(doc, Schema::Boundary);
  BoundarySet b;
  b.phase = doc.at("phase").get<unsigned>();
  b.truncated = doc.at("truncated").get<bool>();
  for (const auto& p : doc.at("points")) b.points.push_back(decode_point(p));
  b.dimension = b.points.empty() ? 0 : static_cast<std::size_t>(b.points.front().size());
  return b;
}

std::vector<InitialCondition> conditions_from_json(const Json& doc) {
  require_valid(doc, Schema::Recover);
  std::vector<InitialCondition> out;
  for (const auto& c : doc.at("conditions")) {
    InitialCondition ic{Rational::parse(c.at("at").get<std::string>()), {}};
    for (const auto& v : c.at("values")) ic.values.push_back(Rational::parse(v.get<std::string>()));
    out.push_back(std::move(ic));
  }
  return out;
}

Json to_json(ComplexPoint z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Json to_json(const RationalPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const PolyTuple& s) {
  Json entries = Json::array();
  for (const auto& p : s.entries()) entries.push_back(to_json(p));
  return Json{{"entries", std::move(entries)}};
}

Json to_json(const BoundaryPoint& p) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(to_json(ComplexPoint(p[i])));
  return a;
}

Json to_json(const BoundarySet& b) {
  Json points = Json::array();
  for (const auto& p : b.points) points.push_back(to_json(p));
  return Json{{"phase", b.phase}, {"points", std::move(points)}, {"truncated", b.truncated}};
}

Json to_json(const ExpansionTrace& trace) {
  Json phases = Json::array();
  for (const auto& p : trace.phases) phases.push_back(to_json(p));
  Json j{{"phases", std::move(phases)},
         {"degree", trace.degree},
         {"rank", to_json(trace.rank)},
         {"limit_index", optional_number(trace.limit_index)},
         {"local_number", optional_number(trace.local_number)},
         {"dimension", optional_number(trace.dimension)}};
  j["local_number_within_claimed_bound"] =
      trace.local_number_within_claimed_bound ? Json(*trace.local_number_within_claimed_bound) : Json(nullptr);
  return j;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::OnBoundary: return "on_boundary";
    case Region::InteriorUpper: return "interior_upper";
    case Region::InteriorLower: return "interior_lower";
    case Region::ExteriorUpper: return "exterior_upper";
    case Region::ExteriorLower: return "exterior_lower";
    case Region::Unclassified: return "unclassified";
  }
  return "unclassified";
}

std::string_view to_string(PhaseStatus s) {
  switch (s) {
    case PhaseStatus::Ok: return "ok";
    case PhaseStatus::Truncated: return "truncated";
    case PhaseStatus::EmptyBoundary: return "empty";
    case PhaseStatus::ZeroEntry: return "zero_entry";
  }
  return "ok";
}

Json to_json(const MassReport& report) {
  Json phases = Json::array();
  for (const auto& p : report.phases) {
    const bool violation = std::find(report.violations.begin(), report.violations.end(), p.phase) != report.violations.end();
    phases.push_back(Json{{"phase", p.phase},
                          {"count", p.count},
                          {"mass", round12(p.mass)},
                          {"violation", violation},
                          {"status", to_string(p.status)}});
  }
  return Json{{"phases", std::move(phases)}, {"violations", report.violations}};
}

std::string mass_report_csv(const MassReport& report) {
  std::ostringstream out;
  out << "phase,count,mass,violation,status\n";
  for (const auto& p : report.phases) {
    const bool violation = std::find(report.violations.begin(), report.violations.end(), p.phase) != report.violations.end();
    out << p.phase << ',' << p.count << ',' << format12(p.mass) << ',' << (violation ? "true" : "false") << ','
        << to_string(p.status) << '\n';
  }
  return out.str();
}

Json to_json(const SendovReport& report) {
  Json per_root = Json::array();
  for (const auto& r : report.per_root) {
    per_root.push_back(Json{{"root", to_json(r.root)}, {"nearest", to_json(r.nearest)}, {"distance", round12(r.distance)}});
  }
  return Json{{"order", report.order},
              {"radius", round12(report.radius)},
              {"tolerance", report.tolerance},
              {"max_min_distance", round12(report.max_min_distance)},
              {"verdict", to_string(report.verdict)},
              {"repeated_roots", report.repeated_roots},
              {"per_root", std::move(per_root)}};
}

Json to_json(const TupleLanguageReport& report) {
  Json per_root = Json::array();
  for (const auto& r : report.per_root) {
    per_root.push_back(Json{{"root", to_json(r.root)},
                            {"nearest_any", round12(r.nearest_any)},
                            {"nearest_diagonal", round12(r.nearest_diagonal)},
                            {"scalar_distance", round12(r.scalar_distance)},
                            {"id_criterion", r.id_criterion}});
  }
  return Json{{"copies", report.copies},
              {"mass_phase0", round12(report.mass_phase0)},
              {"hypothesis_held", report.hypothesis_held},
              {"phase0_count", report.phase0_count},
              {"phase1_count", report.phase1_count},
              {"max_nearest_any", round12(report.max_nearest_any)},
              {"max_nearest_diagonal", round12(report.max_nearest_diagonal)},
              {"per_root", std::move(per_root)}};
}

Json to_json(const FreePointReport& report) {
  Json points = Json::array();
  for (const auto& p : report.points) {
    Json value = Json::array();
    for (Eigen::Index i = 0; i < p.value.size(); ++i) value.push_back(to_json(ComplexPoint(p.value[i])));
    points.push_back(Json{{"coordinate", to_json(p.coordinate)}, {"value", std::move(value)}, {"norm", round12(p.norm)}});
  }
  return Json{{"points", std::move(points)},
              {"distinct_coordinates", report.distinct_coordinates},
              {"within_claim_range", report.within_claim_range},
              {"counterexample", report.counterexample}};
}

Json corpus_summary(const CorpusReport& report) {
  const auto& c = report.config;
  std::size_t strict = 0;
  std::size_t tight = 0;
  std::size_t hypothesis = 0;
  std::size_t repeated = 0;
  for (const auto& s : report.samples) {
    strict += s.verdict == Verdict::StrictPass;
    tight += s.verdict == Verdict::TightPass;
    hypothesis += s.hypothesis_flag;
    repeated += s.repeated_roots;
  }
  Json j{{"seed", c.seed},
         {"degrees", c.degrees},
         {"count", c.count},
         {"delta", round12(c.delta)},
         {"radius", round12(c.radius)},
         {"tolerance", c.tolerance},
         {"samples", report.samples.size()},
         {"violations", report.violations},
         {"max_of_min_distances", round12(report.max_of_min_distances)},
         {"verdicts", Json{{"strict_pass", strict}, {"tight_pass", tight}, {"fail", report.violations}}},
         {"histogram", Json{{"bucket_width", kHistogramWidth}, {"counts", report.histogram}}},
         {"gauss_lucas_max_hull_distance", round12(report.max_gauss_lucas_distance)},
         {"max_recovery_error", round12(report.max_recovery_error)},
         {"hypothesis_held", hypothesis},
         {"repeated_roots", repeated}};
  if (c.higher_order) {
    std::size_t pass = 0;
    for (const auto& s : report.samples) pass += s.higher_order_pass.value_or(false);
    j["higher_order_pass"] = pass;
  }
  return j;
}

std::string corpus_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << "# seed=" << report.config.seed << " delta=" << format12(report.config.delta)
      << " radius=" << format12(report.config.radius) << '\n';
  out << "degree,sample,max_min_distance,verdict,mass_phase0,hypothesis_flag\n";
  for (const auto& s : report.samples) {
    out << s.degree << ',' << s.sample << ',' << format12(s.max_min_distance) << ',' << to_string(s.verdict) << ','
        << format12(s.mass_phase0) << ',' << (s.hypothesis_flag ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace expansiv::io
