#include <doctest.h>

#include <algorithm>

#include "artifact/admissibility.hpp"
#include "artifact/fixtures.hpp"

using namespace artifact;

namespace {
std::string dump(const std::vector<AdmissibilityWitness>& ws) {
  std::string s;
  for (const auto& w : ws) {
    s += w.lemma + " k0=" + std::to_string(w.k0) + " " + w.detail;
    for (const auto& x : w.values) s += " " + x;
    s += "\n";
  }
  return s;
}

bool same(const AdmissibilityWitness& a, const AdmissibilityWitness& b) { return !(a < b) && !(b < a); }
}  // namespace

TEST_CASE("fixture verdicts") {
  for (const auto& fx : fixtures::system_fixtures()) {
    INFO(fx.name);
    auto v = admissibility_report(fx.build());
    bool bad = fx.name == "fig1_counterexample" || fx.name == "rotation_pair_unbalanced";
    CHECK_MESSAGE(v.status == (bad ? AdmissibilityStatus::NotApproximable
                                   : AdmissibilityStatus::ConsistentWithNecessaryConditions),
                  dump(v.witnesses));
    CHECK(std::is_sorted(v.witnesses.begin(), v.witnesses.end()));
    if (v.status == AdmissibilityStatus::NotApproximable) CHECK(!v.witnesses.empty());
  }
}

TEST_CASE("the counterexample has a critical annulus of period 8") {
  auto S = fixtures::fig1_counterexample();
  auto v = admissibility_report(S);
  bool found = std::any_of(v.witnesses.begin(), v.witnesses.end(), [](const AdmissibilityWitness& w) {
    return w.lemma == "annuli-critical" && w.k0 == 8;
  });
  CHECK(found);
  // The red/black pair: degree 2 exactly once along the 8-step chain.
  auto ann = check_annuli_lemma(S, 8);
  auto it = std::find_if(ann.witnesses.begin(), ann.witnesses.end(), [](const AdmissibilityWitness& w) {
    return w.vertices == std::vector<VertexId>{"black0", "red0"};
  });
  REQUIRE(it != ann.witnesses.end());
  CHECK(it->k0 == 8);
  CHECK(it->values == std::vector<std::string>{"degrees=2,1,1,1,1,1,1,1"});
}

TEST_CASE("critical periodic vertices in an invariant branch") {
  auto ws = check_branches_lemma(fixtures::fig1_counterexample());
  bool critical_inside = std::any_of(ws.begin(), ws.end(), [](const AdmissibilityWitness& w) {
    return w.lemma == "branches" && w.vertices == std::vector<VertexId>{"G", "black0"};
  });
  CHECK(critical_inside);
  // Degree-1 periodic sphere V in the branch at the fixed point 0 of W: allowed.
  CHECK(check_branches_lemma(fixtures::rotation_pair_balanced()).empty());
}

TEST_CASE("non-critical annulus: multiplier product") {
  auto good = check_annuli_lemma(fixtures::rotation_pair_balanced(), 2);
  CHECK(good.witnesses.empty());
  CHECK(good.untested.empty());

  auto S = fixtures::rotation_pair_unbalanced();
  auto bad = check_annuli_lemma(S, 2);
  REQUIRE(bad.witnesses.size() == 1);
  const auto& w = bad.witnesses[0];
  CHECK(w.lemma == "annuli-noncritical");
  CHECK(w.k0 == 1);
  CHECK(w.vertices == std::vector<VertexId>{"V", "W"});
  // Oracle: multipliers of the sphere maps at their fixed attaching points.
  Scalar mv = S.sphere_map("V").multiplier(Point::infinity());
  Scalar mw = S.sphere_map("W").multiplier(Point::finite(Scalar(0)));
  CHECK(mv == Scalar(-1));
  CHECK(mw == parse_scalar_spec("-1/2,0"));
  CHECK(mv * mw == parse_scalar_spec("1/2,0"));
  CHECK(std::find(w.values.begin(), w.values.end(), "product=" + to_string(mv * mw)) != w.values.end());
}

TEST_CASE("case A agrees with the multiplier of the composed return map") {
  // The return map of V over two steps fixes infinity with multiplier (-1)^2.
  auto S = fixtures::rotation_pair_unbalanced();
  auto g = iterate(S.sphere_map("V"), 2);
  CHECK(g.multiplier(Point::infinity()) == Scalar(1));
  CHECK(S.sphere_map("V").chart_derivative(Point::infinity()) == S.sphere_map("V").multiplier(Point::infinity()));
  auto h = iterate(S.sphere_map("W"), 3);
  auto m = S.sphere_map("W").multiplier(Point::finite(Scalar(0)));
  CHECK(h.multiplier(Point::finite(Scalar(0))) == m * m * m);
}

TEST_CASE("verdicts are monotone in kmax") {
  for (const auto& fx : fixtures::system_fixtures()) {
    INFO(fx.name);
    auto S = fx.build();
    std::vector<AdmissibilityWitness> prev;
    for (int k = 1; k <= default_kmax(S) + 2; ++k) {
      auto cur = admissibility_report(S, k).witnesses;
      for (const auto& w : prev)
        CHECK(std::any_of(cur.begin(), cur.end(), [&](const AdmissibilityWitness& x) { return same(w, x); }));
      prev = std::move(cur);
    }
  }
}

TEST_CASE("witnesses replay") {
  auto S = fixtures::fig1_counterexample();
  auto v = admissibility_report(S);
  for (const auto& w : v.witnesses) {
    if (w.lemma != "annuli-critical") continue;
    auto again = check_annuli_lemma(S, w.k0).witnesses;
    CHECK(std::any_of(again.begin(), again.end(), [&](const AdmissibilityWitness& x) { return same(w, x); }));
  }
}

TEST_CASE("forgotten iterates are listed as untested") {
  auto v = admissibility_report(fixtures::fig_exmil_forgotten());
  CHECK(!v.untested.empty());
  CHECK(v.status == AdmissibilityStatus::ConsistentWithNecessaryConditions);
}
