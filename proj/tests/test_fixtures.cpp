#include <doctest.h>

#include "artifact/bicritical.hpp"
#include "artifact/fixtures.hpp"

using namespace artifact;

namespace {
std::string dump(const std::vector<Violation>& vs) {
  std::string s;
  for (const auto& v : vs) s += v.kind + ": " + v.detail + "\n";
  return s;
}
}  // namespace

TEST_CASE("every system fixture validates") {
  for (const auto& fx : fixtures::system_fixtures()) {
    INFO(fx.name);
    auto S = fx.build();
    auto vs = validate_system(S);
    CHECK_MESSAGE(vs.empty(), dump(vs));
    CHECK(global_degree(S.cover) == 2);
  }
}

TEST_CASE("classification of the Milnor fixtures") {
  auto S2 = fixtures::fig_exmilnor2();
  auto r2 = classify(S2);
  CHECK(r2.kind == CaseKind::ParabolicOnly);
  CHECK(r2.k0 == 2);
  CHECK(*r2.w0 == "W0");
  CHECK(*r2.v0 == "S");

  auto r = classify(fixtures::fig_exmil());
  CHECK(r.kind == CaseKind::ParabolicAndPolynomial);
  CHECK(r.k0 == 2);
  CHECK(r.k0_prime == 3);

  auto rf = classify(fixtures::fig_exmil_forgotten());
  CHECK(rf.kind == CaseKind::ForgottenPolynomial);
  CHECK(rf.k0_prime == 3);
}

TEST_CASE("classification of the two-cycle fixture") {
  auto r = classify(fixtures::fig3_two_cycles());
  for (const auto& n : r.notes) MESSAGE(n);
  CHECK(r.kind == CaseKind::ParabolicAndPolynomial);
  CHECK(r.k0 == 3);
  CHECK(r.k0_prime == 5);
  CHECK(*r.w0 == "W");
  CHECK(*r.v0 == "VA");
}
