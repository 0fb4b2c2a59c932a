#pragma once
// JSON documents (portrait, tree, cover, system, family, job) and report
// documents.  Parsing is strict; serialization is canonical (sorted keys,
// two-space indent, reduced exact values).

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "artifact/admissibility.hpp"
#include "artifact/bicritical.hpp"
#include "artifact/rescale.hpp"

namespace artifact::io {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed JSON text.
struct SyntaxError : FormatError {
  SyntaxError(const std::string& msg, int line, int column);
  int line, column;
};
struct UnknownKind : FormatError {
  using FormatError::FormatError;
};
// Well-formed JSON that does not follow the document schema: unknown or
// missing fields, wrong types, malformed numbers.
struct SchemaError : FormatError {
  using FormatError::FormatError;
};
// The payload describes an object violating its invariants.
struct ConstructionError : FormatError {
  ConstructionError(const std::string& msg, std::vector<Violation> v = {});
  std::vector<Violation> violations;
};

using Payload = std::variant<Portrait, TreeOfSpheres, CoverBetweenTrees, DynamicalTreeSystem, Family, RescalingJob>;

struct Document {
  std::string kind;
  std::string version = kFormatVersion;
  Payload payload;
};

Document make_document(Payload p);
std::string kind_of(const Payload& p);

enum class Checks { Structural, Full };

// Full: the payload's validator must report no violations.  Structural: only
// what is needed to build the objects (tree invariants, non-singular maps).
Document parse_document(const std::string& text, Checks checks = Checks::Full);
std::string serialize(const Document& doc);

// Canonical text of a JSON value: sorted keys, two-space indent, final newline.
std::string canonical(const Json& j);

// "p/q" or "p"; throws SchemaError otherwise.
Rational parse_rational(const std::string& s);

// Fragments.
Json to_json(const Rational& q);
Json to_json(const Scalar& s);
Json to_json(const Point& p);
Json to_json(const RationalFunction& f);
Json to_json(const ParamCoeff& c);
Json to_json(const ParamRationalFunction& f);
Json to_json(const Portrait& P);
Json to_json(const TreeOfSpheres& T);
Json to_json(const CoverBetweenTrees& C);
Json to_json(const DynamicalTreeSystem& S);
Json to_json(const Family& f);
Json to_json(const RescalingJob& job);

Portrait portrait_from_json(const Json& j, const std::string& path = "portrait");
TreeOfSpheres tree_from_json(const Json& j, const std::string& path = "tree");
CoverBetweenTrees cover_from_json(const Json& j, const std::string& path = "cover");
DynamicalTreeSystem system_from_json(const Json& j, const std::string& path = "system");
Family family_from_json(const Json& j, const std::string& path = "family");
RescalingJob job_from_json(const Json& j, const std::string& path = "job");

// Reports.
Json violations_json(const std::vector<Violation>& vs);
Json verdict_json(const AdmissibilityVerdict& v);
Json classification_json(const BicriticalClassification& c);
Json limit_json(const RescalingJob& job, const LimitResult& r);
Json report(const std::string& command, Json payload);

}  // namespace artifact::io
