// Acceptance run: one PASS/FAIL line per criterion.  Exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "artifact/admissibility.hpp"
#include "artifact/bicritical.hpp"
#include "artifact/corpus.hpp"
#include "artifact/format.hpp"
#include "artifact/io.hpp"
#include "artifact/rescale.hpp"
#include "artifact/roots.hpp"
#include "random_covers.hpp"

using namespace artifact;

namespace {

constexpr double kExactSeconds = 1.0;
constexpr double kNumericSeconds = 30.0;
const char* const kCoefficientTolerance = "1e-3";
constexpr int kIndexCases = 50;
constexpr int kRandomCovers = 100;
constexpr unsigned kRhSeed = 1001;
constexpr unsigned kPathSeed = 2002;
constexpr unsigned kIndexSeed = 3003;

Scalar q(long n, long d = 1) { return to_scalar(make_rational(n, d)); }
RationalFunction rf(std::vector<Scalar> n, std::vector<Scalar> d) {
  return RationalFunction(Poly<Scalar>(std::move(n)), Poly<Scalar>(std::move(d)));
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

io::Document load_fixture(const std::string& name) {
  std::ifstream in(fixture_dir() + "/" + name + ".json");
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_document(ss.str());
}

DynamicalTreeSystem load_system(const std::string& name) { return std::get<DynamicalTreeSystem>(load_fixture(name).payload); }

Outcome exact_period_two() {
  auto t0 = std::chrono::steady_clock::now();
  auto lim = limit_at_param(iterate(milnor_family(), 2), Rational(1));
  double s = seconds_since(t0);
  auto want = rf({q(0), q(3), q(1)}, {q(-1), q(1)});
  bool monic = lim.map.den().lead() == q(1);
  return {lim.map == want && monic && s < kExactSeconds, to_string(lim.map) + ", " + secs(s)};
}

Outcome persistent_multiplier() {
  auto t0 = std::chrono::steady_clock::now();
  auto f2 = iterate(milnor_family(), 2);
  auto zero = ExtendedPoint<ParamCoeff>::finite(ParamCoeff(0));
  bool fixed = f2.eval(zero) == zero;
  ParamCoeff m = f2.multiplier(zero);
  double s = seconds_since(t0);
  return {fixed && m == ParamCoeff(-3) && s < kExactSeconds, "multiplier " + to_string(m) + " in Q(a), " + secs(s)};
}

Outcome numeric_period_three() {
  auto job = job_milnor_k3();
  auto t0 = std::chrono::steady_clock::now();
  auto r = numeric_limit(job);
  double s = seconds_since(t0);
  PrecisionScope ps(job.digits);
  const Real tol(kCoefficientTolerance);
  bool close = r.status == LimitStatus::Converged && r.num.size() == 3 && r.den.size() == 1 &&
               abs(r.num[2] - Cx(1)) < tol && abs(r.num[1]) < tol && abs(r.num[0] - Cx(Real(1) / 4)) < tol &&
               abs(r.den[0] - Cx(1)) < tol;
  bool snapped = r.exact_map && *r.exact_map == rf({q(1, 4), q(0), q(1)}, {q(1)});
  std::string samples;
  for (const auto& a : job_samples(job)) samples += (samples.empty() ? "" : ",") + a.get_str();
  return {close && snapped && s < kNumericSeconds,
          std::string(status_name(r.status)) + ", snapped " + (r.exact_map ? to_string(*r.exact_map) : "none") +
              ", samples " + samples + ", " + std::to_string(job.digits) + " digits, " + secs(s)};
}

Outcome parabolic_at_infinity() {
  auto g = rf({q(0), q(3), q(1)}, {q(-1), q(1)});
  bool fixed = g.eval(pt_inf()).is_inf();
  Scalar m = g.multiplier(pt_inf());
  return {fixed && m == q(1), "multiplier at inf " + to_string(m)};
}

// z(z + alpha)/(beta z + 1): fixed points 0, inf and z3 = (1 - alpha)/(1 - beta),
// where beta z3 + 1 = z3 + alpha gives f'(z3) = (2 z3 + alpha - beta z3)/(z3 + alpha).
Outcome index_formula() {
  std::mt19937 rng(kIndexSeed);
  auto rnd = [&] { return make_rational(long(rng() % 41) - 20, 1 + long(rng() % 7)); };
  int done = 0, failures = 0;
  while (done < kIndexCases) {
    Rational a = rnd(), b = rnd();
    if (a * b == 1 || a == 1 || b == 1) continue;
    Rational third = (1 - a) / (1 - b);
    if (third == 0) continue;  // fixed points must be distinct
    auto f = rf({q(0), to_scalar(a), q(1)}, {q(1), to_scalar(b)});
    auto fp = fixed_points(f);
    Scalar sum = q(0);
    int count = 0;
    bool ok = fp.complete();
    for (const auto& [p, mult] : fp.roots) {
      Scalar lam = f.multiplier(p);
      if (mult != 1 || lam == q(1)) ok = false;
      if (!ok) break;
      sum += q(1) / (q(1) - lam);
      ++count;
    }
    ok = ok && count == 3 && sum == q(1);
    Rational lam3 = (2 * third + a - b * third) / (third + a);
    ok = ok && f.multiplier(pt(to_scalar(third))) == to_scalar(lam3);
    if (!ok) ++failures;
    ++done;
  }
  return {failures == 0, std::to_string(done) + " maps, " + std::to_string(failures) + " failures"};
}

Outcome riemann_hurwitz() {
  int fixtures_checked = 0, components = 0, failures = 0;
  std::string first;
  auto check = [&](const CoverBetweenTrees& C, const std::string& what) {
    auto r = rh_suite(C);
    components += r.components;
    if (!r.ok()) {
      ++failures;
      if (first.empty()) first = what + ": " + r.failures.front();
    }
  };
  for (const auto& e : corpus()) {
    auto doc = load_fixture(e.name);
    if (auto* S = std::get_if<DynamicalTreeSystem>(&doc.payload)) {
      check(S->cover, e.name);
      ++fixtures_checked;
    }
  }
  std::mt19937 rng(kRhSeed);
  for (int i = 0; i < kRandomCovers; ++i) {
    auto rc = testing::random_bicritical_cover(rng, 3 + i % 10);
    if (!validate_cover(rc.cover).empty()) {
      ++failures;
      if (first.empty()) first = "random cover " + std::to_string(i) + " invalid";
      continue;
    }
    check(rc.cover, "random cover " + std::to_string(i));
  }
  return {failures == 0 && fixtures_checked > 0, std::to_string(fixtures_checked) + " fixtures + " +
                                                      std::to_string(kRandomCovers) + " random covers, " +
                                                      std::to_string(components) + " components, " +
                                                      std::to_string(failures) + " failures" +
                                                      (first.empty() ? "" : " (" + first + ")")};
}

Outcome counterexample() {
  auto v = admissibility_report(load_system("fig1_counterexample"));
  const AdmissibilityWitness* w = nullptr;
  for (const auto& x : v.witnesses)
    if (x.lemma == "annuli-critical" && x.k0 == 8) w = &x;
  std::string d = status_name(v.status);
  if (w) d += ", annuli-critical witness on " + w->vertices.front() + "/" + w->vertices.back() + " with k0 = 8";
  return {v.status == AdmissibilityStatus::NotApproximable && w, d};
}

Outcome classification() {
  std::vector<std::string> bad;
  auto r2 = classify(load_system("fig_exmilnor2"));
  if (r2.kind != CaseKind::ParabolicOnly || r2.k0 != 2) bad.push_back("fig_exmilnor2 " + case_name(r2.kind));

  auto r = classify(load_system("fig_exmil"));
  bool quarter = false;
  for (const auto& cd : r.cycles)
    if (cd.critical_fixed_point)
      if (auto c = quadratic_polynomial_invariant(cd.cover, *cd.critical_fixed_point)) quarter |= *c == q(1, 4);
  if (r.kind != CaseKind::ParabolicAndPolynomial || r.k0 != 2 || r.k0_prime != 3 || !quarter)
    bad.push_back("fig_exmil " + case_name(r.kind));

  auto r3 = classify(load_system("fig3_two_cycles"));
  if (r3.kind != CaseKind::ParabolicAndPolynomial || r3.k0 != 3 || r3.k0_prime != 5)
    bad.push_back("fig3_two_cycles " + case_name(r3.kind));

  int accepted = 0;
  for (const auto& fx : fixtures::system_fixtures()) {
    auto S = load_system(fx.name);
    if (admissibility_report(S).status != AdmissibilityStatus::ConsistentWithNecessaryConditions) continue;
    if (classify(S).kind == CaseKind::TheoremContradiction) {
      bad.push_back(fx.name + " contradiction");
      continue;
    }
    ++accepted;
    auto cs = critical_cycles(S);
    if (cs.size() > 2) bad.push_back(fx.name + " has " + std::to_string(cs.size()) + " critical cycles");
    for (const auto& c : cs)
      if (c.cycle_degree != S.cover.portrait.d) bad.push_back(fx.name + " cycle of degree " + std::to_string(c.cycle_degree));
  }
  std::string d = "3 goldens, " + std::to_string(accepted) + " accepted fixtures";
  for (const auto& b : bad) d += "; " + b;
  return {bad.empty(), d};
}

Outcome critical_path_property() {
  std::mt19937 rng(kPathSeed);
  int failures = 0;
  for (int i = 0; i < kRandomCovers; ++i) {
    auto rc = testing::random_bicritical_cover(rng, 3 + i % 10);
    const auto& C = rc.cover;
    const CombTree& T = C.source.tree;
    std::set<VertexId> crit;
    for (const auto& v : T.internal_vertices())
      if (C.vertex_degree(v) >= 2) crit.insert(v);
    auto p = T.path(T.leaf(rc.c), T.leaf(rc.c1));
    std::set<VertexId> inner(p.begin() + 1, p.end() - 1);
    bool ok = validate_cover(C).empty() && crit == inner && crit == rc.critical_vertices;
    try {
      auto cp = critical_path(C);
      ok = ok && (cp == p || std::equal(cp.rbegin(), cp.rend(), p.begin(), p.end()));
    } catch (const StructuralViolation&) {
      ok = false;
    }
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(kRandomCovers) + " random covers, " + std::to_string(failures) + " failures"};
}

Outcome misconfigured_job() {
  auto job = std::get<RescalingJob>(load_fixture("milnor_k3_period2").payload);
  try {
    auto r = numeric_limit(job);
    bool flagged = r.status == LimitStatus::Divergent || r.status == LimitStatus::DegreeInstability;
    return {flagged && !r.exact_map, status_name(r.status) + ": " + r.message};
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact period-2 Milnor limit", exact_period_two},
      {"persistent multiplier -3 in Q(a)", persistent_multiplier},
      {"numeric period-3 Milnor limit", numeric_period_three},
      {"parabolic fixed point at infinity", parabolic_at_infinity},
      {"holomorphic index formula", index_formula},
      {"Riemann-Hurwitz suite", riemann_hurwitz},
      {"counterexample rejected", counterexample},
      {"classification goldens", classification},
      {"critical vertices form the critical path", critical_path_property},
      {"misconfigured job flagged", misconfigured_job},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
