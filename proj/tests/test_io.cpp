#include <fstream>
#include <sstream>

#include "artifact/corpus.hpp"
#include "artifact/format.hpp"
#include "artifact/io.hpp"
#include "doctest.h"

using namespace artifact;
using io::Json;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
std::string fixture_text(const std::string& name) { return slurp(std::string(ARTIFACT_FIXTURE_DIR) + "/" + name + ".json"); }
Json fixture_json(const std::string& name) { return Json::parse(fixture_text(name)); }
}  // namespace

TEST_CASE("corpus builders reproduce the frozen fixtures") {
  for (const auto& e : corpus()) {
    INFO(e.name);
    const std::string text = fixture_text(e.name);
    CHECK(io::serialize(e.build()) == text);
    auto doc = io::parse_document(text);
    CHECK(io::serialize(doc) == text);
    CHECK(doc.version == io::kFormatVersion);
  }
}

TEST_CASE("document kinds") {
  CHECK(io::parse_document(fixture_text("fig3_two_cycles")).kind == "system");
  CHECK(io::parse_document(fixture_text("milnor_family")).kind == "family");
  CHECK(io::parse_document(fixture_text("milnor_k2")).kind == "job");
  auto sys = io::parse_document(fixture_text("fig3_two_cycles"));
  CHECK(validate_system(std::get<DynamicalTreeSystem>(sys.payload)).empty());

  auto sq = std::get<DynamicalTreeSystem>(io::parse_document(fixture_text("single_square")).payload);
  for (const auto& [kind, payload] : std::vector<std::pair<std::string, io::Payload>>{
           {"portrait", sq.cover.portrait}, {"tree", sq.treeX}, {"cover", sq.cover}}) {
    INFO(kind);
    auto d = io::make_document(payload);
    CHECK(d.kind == kind);
    auto text = io::serialize(d);
    CHECK(io::serialize(io::parse_document(text)) == text);
  }
}

TEST_CASE("outcomes of the parsed fixtures") {
  auto sys = [](const std::string& n) { return std::get<DynamicalTreeSystem>(io::parse_document(fixture_text(n)).payload); };
  CHECK(admissibility_report(sys("fig1_counterexample")).status == AdmissibilityStatus::NotApproximable);
  CHECK(admissibility_report(sys("fig3_two_cycles")).status == AdmissibilityStatus::ConsistentWithNecessaryConditions);

  auto c3 = classify(sys("fig3_two_cycles"));
  CHECK(c3.kind == CaseKind::ParabolicAndPolynomial);
  CHECK(c3.k0 == 3);
  CHECK(c3.k0_prime == 5);
  CHECK(classify(sys("fig_exmilnor2")).kind == CaseKind::ParabolicOnly);
  CHECK(classify(sys("fig_exmil_forgotten")).kind == CaseKind::ForgottenPolynomial);
  CHECK(classify(sys("fig5_A1")).kind == CaseKind::NoRescalingCertificate);

  auto job = std::get<RescalingJob>(io::parse_document(fixture_text("milnor_k2")).payload);
  auto r = exact_limit(job);
  CHECK(r.status == LimitStatus::Converged);
  CHECK(to_string(*r.exact_map) == "(z^2 + 3*z)/(z - 1)");
}

TEST_CASE("syntax errors carry a position") {
  auto text = fixture_text("single_square");
  try {
    io::parse_document(text.substr(0, text.size() / 2));
    FAIL("no error");
  } catch (const io::SyntaxError& e) {
    CHECK(e.line > 1);
    CHECK(e.column >= 1);
  }
  try {
    io::parse_document("{\n  \"kind\": \"system\",\n  \"version\": \"1\"\n  \"payload\": {}\n}");
    FAIL("no error");
  } catch (const io::SyntaxError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("schema errors") {
  auto j = fixture_json("single_square");
  SUBCASE("unknown kind") {
    j["kind"] = "sphere";
    CHECK_THROWS_AS(io::parse_document(j.dump()), io::UnknownKind);
  }
  SUBCASE("unknown field names its path") {
    j["payload"]["cover"]["portrait"]["extra"] = 1;
    try {
      io::parse_document(j.dump());
      FAIL("no error");
    } catch (const io::SchemaError& e) {
      CHECK(std::string(e.what()) == "payload.cover.portrait: unknown field 'extra'");
    }
  }
  SUBCASE("missing field") {
    j["payload"]["cover"].erase("maps");
    CHECK_THROWS_AS(io::parse_document(j.dump()), io::SchemaError);
  }
  SUBCASE("wrong version") {
    j["version"] = "2";
    CHECK_THROWS_AS(io::parse_document(j.dump()), io::FormatError);
  }
  SUBCASE("malformed rational") {
    j["payload"]["cover"]["portrait"]["d"] = "2.0";
    CHECK_THROWS_AS(io::parse_document(j.dump()), io::SchemaError);
  }
  SUBCASE("duplicate key") {
    std::string text = "{\"kind\": \"system\", \"kind\": \"system\", \"version\": \"1\", \"payload\": {}}";
    CHECK_THROWS_AS(io::parse_document(text), io::SchemaError);
  }
}

TEST_CASE("construction errors list the violations") {
  auto j = fixture_json("single_square");
  j["payload"]["cover"]["portrait"]["deg"]["zero"] = 1;
  try {
    io::parse_document(j.dump());
    FAIL("no error");
  } catch (const io::ConstructionError& e) {
    bool rh = false;
    for (const auto& v : e.violations) rh |= v.kind == "riemann_hurwitz";
    CHECK(rh);
  }
  // Structural parsing still builds the object.
  auto doc = io::parse_document(j.dump(), io::Checks::Structural);
  CHECK(!validate_system(std::get<DynamicalTreeSystem>(doc.payload)).empty());
}

TEST_CASE("rationals") {
  CHECK(io::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(io::parse_rational("7") == Rational(7));
  CHECK(io::parse_rational("2/4") == Rational(1, 2));
  for (const char* bad : {"1/0", "01", "1.5", "", "+1", "3/-4"}) CHECK_THROWS_AS(io::parse_rational(bad), io::SchemaError);
}

TEST_CASE("canonical text") {
  Json j = {{"b", 1}, {"a", {1, 2}}};
  CHECK(io::canonical(j) == "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}
