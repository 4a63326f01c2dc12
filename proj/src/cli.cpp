#include "expansiv/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "expansiv/boundary.hpp"
#include "expansiv/expansion.hpp"
#include "expansiv/io.hpp"
#include "expansiv/sendov.hpp"

namespace expansiv::cli {

namespace {

using io::Json;

unsigned parse_unsigned(std::string_view text) {
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not a degree: \"" + std::string(text) + "\"");
  }
  return value;
}

// "2..8" or "2,3,5".
std::vector<unsigned> parse_degrees(const std::string& text) {
  std::vector<unsigned> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const unsigned lo = parse_unsigned(std::string_view(text).substr(0, dots));
    const unsigned hi = parse_unsigned(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::ParseError, "empty degree range \"" + text + "\"");
    for (unsigned d = lo; d <= hi; ++d) out.push_back(d);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_unsigned(std::string_view(text).substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string schema_footer() {
  std::string footer = "Exit codes: 0 success, 1 mathematical failure, 2 input or usage error, 3 solver failure.\n"
                       "EXPANSIV_TOL overrides the root solver tolerance (default 1e-10).\n\nInput schemas:\n";
  for (auto s : {io::Schema::Poly, io::Schema::Tuple, io::Schema::Boundary, io::Schema::Recover, io::Schema::Classify,
                 io::Schema::Members}) {
    footer += "\n" + std::string(io::schema_name(s)) + ".schema.json\n" + std::string(io::schema_text(s));
  }
  return footer;
}

struct Options {
  std::string input;
  std::string output;
  unsigned phase = 0;
  unsigned expand_phases = 1;
  unsigned phases = 0;
  std::size_t cap = kDefaultBoundaryCap;
  bool trace = false;
  double epsilon = 0.1;
  std::string format = "json";
  std::string point;
  double radius = 1.0;
  double tol = kDefaultSendovTolerance;
  bool higher_order = false;
  bool tuple_language = false;
  std::size_t copies = 0;
  std::string degrees = "2..8";
  unsigned count = 100;
  std::uint64_t seed = 0;
  double delta = 0.99;
};

class Session {
 public:
  Session(const Options& o, std::istream& in) : o_(o), in_(in) {}

  Json input() {
    std::string text;
    if (o_.input.empty() || o_.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(o_.input);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open input file " + o_.input);
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return io::parse_text(text);
  }

 private:
  const Options& o_;
  std::istream& in_;
};

struct Result {
  std::string text;
  int code = kSuccess;
};

Result json_result(const Json& doc, int code = kSuccess) { return {io::dump(doc), code}; }

Result do_expand(const Options& o, Session& s) {
  const PolyTuple t = io::tuple_from_json(s.input());
  if (o.trace) return json_result(io::to_json(trace_expansion(t)));
  return json_result(io::to_json(expand_phase(t, o.expand_phases)));
}

Result do_rank(Session& s) {
  const PolyTuple t = io::tuple_from_json(s.input());
  const auto [rank, degree] = rank_and_degree(t);
  const auto ms = measure_and_speed(t);
  return json_result(Json{{"rank", io::to_json(rank)},
                          {"degree", degree},
                          {"measure", io::round12(ms.measure)},
                          {"speed", ms.speed ? Json(io::round12(*ms.speed)) : Json(nullptr)}});
}

Result do_limit(Session& s) {
  const ExpansionTrace trace = trace_expansion(io::tuple_from_json(s.input()));
  const auto limit = limit_of(trace);
  const LocalNumber ln = local_and_dimension(trace);
  return json_result(Json{{"degree", trace.degree},
                          {"limit_index", limit->index},
                          {"local_number", ln.local_number},
                          {"dimension", ln.dimension},
                          {"principal_equation", ln.local_number + ln.dimension == trace.degree},
                          {"local_number_within_claimed_bound", ln.within_claimed_bound},
                          {"limit", io::to_json(limit->tuple)}});
}

Result do_recover(const Options& o, Session& s) {
  const Json doc = s.input();
  const auto conditions = io::conditions_from_json(doc);
  const PolyTuple expanded = io::tuple_from_json(Json{{"entries", doc.at("entries")}});
  return json_result(io::to_json(recover(expanded, conditions, o.phases)));
}

Result do_boundary(const Options& o, Session& s) {
  return json_result(io::to_json(boundary_set(io::tuple_from_json(s.input()), o.phase, o.cap)));
}

Result do_mass(const Options& o, Session& s) {
  const BoundarySet b = boundary_set(io::tuple_from_json(s.input()), o.phase, o.cap);
  return json_result(Json{{"phase", b.phase},
                          {"count", b.size()},
                          {"full_count", b.full_size()},
                          {"mass", io::round12(mass_of(b))},
                          {"truncated", b.truncated},
                          {"lower_bound", b.truncated}});
}

Json metrics_json(const PhaseMember& m, const MemberMetrics& mm) {
  return Json{{"phase", m.phase},
              {"mass", io::round12(mm.metric.mass)},
              {"speed", io::round12(mm.metric.speed)},
              {"momentum", io::round12(mm.metric.momentum)},
              {"index", mm.index ? Json(io::round12(*mm.index)) : Json(nullptr)},
              {"infinite_index", mm.infinite_index},
              {"mass_lower_bound", mm.mass_lower_bound}};
}

Result do_metrics(const Options& o, Session& s) {
  const Json doc = s.input();
  std::vector<PhaseMember> members;
  Json out = Json::object();
  if (doc.is_object() && doc.contains("members")) {
    const auto diagnostics = io::schema_validate(doc, io::Schema::Members);
    if (!diagnostics.empty()) {
      throw Error(ErrorKind::ParseError, diagnostics.front().pointer + ": " + diagnostics.front().message);
    }
    for (const auto& m : doc.at("members")) {
      members.push_back({io::tuple_from_json(m.at("tuple")), m.at("phase").get<unsigned>()});
    }
  } else {
    const PolyTuple t = io::tuple_from_json(doc);
    const ExpansionTrace trace = trace_expansion(t);
    const auto ms = measure_and_speed(t);
    out["measure"] = io::round12(ms.measure);
    out["speed"] = ms.speed ? Json(io::round12(*ms.speed)) : Json(nullptr);
    if (trace.degree > 0) {
      const auto h = harmonic_speed_sum(trace);
      out["harmonic_speed_sum"] =
          Json{{"lhs", io::round12(h.lhs)}, {"rhs", io::round12(h.rhs)}, {"harmonic_number", h.harmonic.str()}};
    }
    members.push_back({t, o.phase});
  }
  const auto metrics = momentum_and_index(members, o.cap);
  Json list = Json::array();
  for (std::size_t k = 0; k < members.size(); ++k) list.push_back(metrics_json(members[k], metrics[k]));
  out["members"] = std::move(list);
  return json_result(out);
}

Result do_integral(const Options& o, Session& s) {
  const BoundaryIntegral bi = boundary_integral(io::tuple_from_json(s.input()), o.phase, o.cap);
  return json_result(
      Json{{"phase", o.phase}, {"value", io::to_json(bi.value)}, {"modulus", io::round12(bi.modulus)}, {"truncated", bi.truncated}});
}

Result do_classify(const Options& o, Session& s) {
  const Json doc = s.input();
  const auto diagnostics = io::schema_validate(doc, io::Schema::Classify);
  if (!diagnostics.empty()) {
    throw Error(ErrorKind::ParseError, diagnostics.front().pointer + ": " + diagnostics.front().message);
  }
  const BoundaryPoint p = io::point_from_json(doc.at("point"));
  const BoundarySet b = boundary_set(io::tuple_from_json(doc.at("tuple")), o.phase, o.cap);
  const Classification c = classify_point(p, b, o.epsilon);
  return json_result(Json{{"phase", o.phase},
                          {"region", io::to_string(c.region)},
                          {"neighbourhood", c.neighbourhood},
                          {"identifier", c.identifier_weak ? "weak" : "strong"}});
}

Result do_audit(const Options& o, Session& s) {
  const PolyTuple t = io::tuple_from_json(s.input());
  const MassReport report = regularity_audit(t, o.cap);
  bool flagged = !report.violations.empty();
  if (o.format == "csv") return {io::mass_report_csv(report), flagged ? kMathematicalFailure : kSuccess};

  Json out = io::to_json(report);
  if (!o.point.empty()) {
    const FreePointReport fp = free_points(t, o.phase, io::point_from_json(io::parse_text(o.point)));
    flagged = flagged || fp.counterexample;
    Json free = io::to_json(fp);
    free["phase"] = o.phase;
    out["free_points"] = std::move(free);
  }
  return json_result(out, flagged ? kMathematicalFailure : kSuccess);
}

Result do_sendov(const Options& o, Session& s) {
  const RationalPoly f = io::poly_from_json(s.input());
  const SendovReport r = sendov_check(f, o.radius, o.tol);
  bool pass = r.pass();
  Json out{{"sendov", io::to_json(r)}};
  if (o.higher_order) {
    Json list = Json::array();
    for (const auto& h : higher_order_check(f, o.radius, o.tol)) {
      pass = pass && h.pass();
      list.push_back(io::to_json(h));
    }
    out["higher_order"] = std::move(list);
  }
  if (o.tuple_language) {
    const auto copies = o.copies == 0 ? std::nullopt : std::optional<std::size_t>(o.copies);
    out["tuple_language"] = io::to_json(tuple_language_check(f, o.tol, copies));
  }
  return json_result(out, pass ? kSuccess : kMathematicalFailure);
}

Result do_corpus(const Options& o) {
  CorpusConfig config;
  config.degrees = parse_degrees(o.degrees);
  config.count = o.count;
  config.seed = o.seed;
  config.delta = o.delta;
  config.radius = o.radius;
  config.tolerance = o.tol;
  config.higher_order = o.higher_order;
  const CorpusReport report = corpus_run(config);
  const int code = report.violations == 0 ? kSuccess : kMathematicalFailure;
  if (o.format == "csv") return {io::corpus_csv(report), code};
  return json_result(io::corpus_summary(report), code);
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SolverFailure:
      return kSolverFailure;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::SizeMismatch:
    case ErrorKind::TupleTooShort:
    case ErrorKind::BadDegree:
    case ErrorKind::ConditionCountMismatch:
    case ErrorKind::ZeroPolynomial:
      return kUsageError;
    default:
      return kMathematicalFailure;
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Expansion calculus on tuples of rational polynomials, with boundary and Sendov audits.", "expansiv"};
  app.require_subcommand(1, 1);
  app.footer(schema_footer());

  auto with_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "Input JSON file (default stdin)");
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
    return sub;
  };
  auto with_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Boundary point cap")->check(CLI::PositiveNumber);
    return sub;
  };

  auto* expand = with_io(app.add_subcommand("expand", "Apply the expansion map --phase times"));
  expand->add_option("--phase", o.expand_phases, "Number of phases (default 1)");
  expand->add_flag("--trace", o.trace, "Emit every phase with rank, limit and dimension");

  auto* rank = with_io(app.add_subcommand("rank", "Rank, degree of expansion, measure and speed"));
  auto* limit = with_io(app.add_subcommand("limit", "Limit of expansion, local number and dimension"));

  auto* recover_cmd = with_io(app.add_subcommand("recover", "Undo --phases expansions using initial conditions"));
  recover_cmd->add_option("--phases", o.phases, "Number of recovery steps")->required();

  auto* boundary = with_cap(with_io(app.add_subcommand("boundary", "Boundary set of a phase")));
  boundary->add_option("--phase", o.phase, "Phase");

  auto* mass = with_cap(with_io(app.add_subcommand("mass", "Mass of a phase boundary")));
  mass->add_option("--phase", o.phase, "Phase");

  auto* metrics = with_cap(with_io(app.add_subcommand("metrics", "Speed, mass, momentum and index")));
  metrics->add_option("--phase", o.phase, "Phase when the input is a single tuple");

  auto* integral = with_cap(with_io(app.add_subcommand("integral", "Special integral along a phase boundary")));
  integral->add_option("--phase", o.phase, "Phase");

  auto* classify = with_cap(with_io(app.add_subcommand("classify", "Interior/exterior position of a point")));
  classify->add_option("--phase", o.phase, "Phase");
  classify->add_option("--epsilon", o.epsilon, "Neighbourhood radius")->check(CLI::PositiveNumber);

  auto* audit = with_cap(with_io(app.add_subcommand("audit", "Per-phase masses and free-point evidence")));
  audit->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  audit->add_option("--point", o.point, "Boundary point as JSON [[re,im],...] for the free-point check");
  audit->add_option("--phase", o.phase, "Phase of --point");

  auto* sendov = with_io(app.add_subcommand("sendov", "Distances from zeros to critical points"));
  sendov->add_option("--radius", o.radius, "Disk radius")->check(CLI::PositiveNumber);
  sendov->add_option("--tol", o.tol, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  sendov->add_flag("--higher-order", o.higher_order, "Also check every higher derivative");
  sendov->add_flag("--tuple-language", o.tuple_language, "Also run the tuple restatement");
  sendov->add_option("--copies", o.copies, "Tuple length for --tuple-language (default degree + 1)");

  auto* corpus = app.add_subcommand("corpus", "Seeded Sendov corpus run");
  corpus->add_option("-o,--output", o.output, "Output file (default stdout)");
  corpus->add_option("--degrees", o.degrees, "Degrees as lo..hi or a comma list")->default_val("2..8");
  corpus->add_option("--count", o.count, "Samples per degree")->default_val(100)->check(CLI::PositiveNumber);
  corpus->add_option("--seed", o.seed, "RNG seed")->required();
  corpus->add_option("--delta", o.delta, "Root disk radius for sampling")->default_val(0.99);
  corpus->add_option("--radius", o.radius, "Verdict radius")->default_val(1.0);
  corpus->add_option("--tol", o.tol, "Verdict tolerance")->check(CLI::NonNegativeNumber);
  corpus->add_flag("--higher-order", o.higher_order, "Also check higher derivatives");
  corpus->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Session session(o, in);
  Result result;
  try {
    if (*expand) result = do_expand(o, session);
    else if (*rank) result = do_rank(session);
    else if (*limit) result = do_limit(session);
    else if (*recover_cmd) result = do_recover(o, session);
    else if (*boundary) result = do_boundary(o, session);
    else if (*mass) result = do_mass(o, session);
    else if (*metrics) result = do_metrics(o, session);
    else if (*integral) result = do_integral(o, session);
    else if (*classify) result = do_classify(o, session);
    else if (*audit) result = do_audit(o, session);
    else if (*sendov) result = do_sendov(o, session);
    else if (*corpus) result = do_corpus(o);
  } catch (const Error& e) {
    err << "expansiv: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "expansiv: ParseError: " << e.what() << '\n';
    return kUsageError;
  }

  if (o.output.empty() || o.output == "-") {
    out << result.text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "expansiv: cannot open output file " << o.output << '\n';
      return kUsageError;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace expansiv::cli
