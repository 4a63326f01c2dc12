#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "expansiv/boundary.hpp"
#include "expansiv/expansion.hpp"
#include "expansiv/sendov.hpp"

namespace expansiv::io {

using Json = nlohmann::ordered_json;

/// Round to 12 significant digits, the precision of every emitted float.
double round12(double x);
/// "%.12g" text of x.
std::string format12(double x);

enum class Schema { Poly, Tuple, Boundary, Recover, Classify, Members };

std::string_view schema_name(Schema s);
/// Schema text as shipped under schemas/.
std::string_view schema_text(Schema s);

struct Diagnostic {
  std::string pointer;  // JSON pointer, "/" for the document root
  std::string message;
};

/// Every violation of `schema` in `doc`; empty when the document is valid.
std::vector<Diagnostic> schema_validate(const Json& doc, Schema schema);

/// Parse text, throwing Error(ParseError) with line and column on failure.
Json parse_text(std::string_view text);

// Decoders validate first and throw Error(ParseError) naming the first pointer.
RationalPoly poly_from_json(const Json& doc);
PolyTuple tuple_from_json(const Json& doc);
BoundaryPoint point_from_json(const Json& doc);
BoundarySet boundary_from_json(const Json& doc);
std::vector<InitialCondition> conditions_from_json(const Json& doc);

Json to_json(ComplexPoint z);
Json to_json(const RationalPoly& p);
Json to_json(const PolyTuple& s);
Json to_json(const BoundaryPoint& p);
Json to_json(const BoundarySet& b);
Json to_json(const ExpansionTrace& trace);
Json to_json(const MassReport& report);
Json to_json(const SendovReport& report);
Json to_json(const TupleLanguageReport& report);
Json to_json(const FreePointReport& report);

std::string_view to_string(Region r);
std::string_view to_string(PhaseStatus s);

/// MassReport as CSV: phase,count,mass,violation,status.
std::string mass_report_csv(const MassReport& report);

/// Corpus summary: seed and configuration first, then aggregates.
Json corpus_summary(const CorpusReport& report);
/// One row per sample, preceded by a "# seed=…" header line.
std::string corpus_csv(const CorpusReport& report);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

}  // namespace expansiv::io
