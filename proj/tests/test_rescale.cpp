#include <doctest.h>

#include <chrono>

#include "artifact/format.hpp"
#include "artifact/rescale.hpp"
#include "artifact/roots.hpp"

using namespace artifact;

namespace {
Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }
RationalFunction rf(std::vector<Scalar> n, std::vector<Scalar> d) {
  return RationalFunction(Poly<Scalar>(std::move(n)), Poly<Scalar>(std::move(d)));
}
}  // namespace

TEST_CASE("exact period-2 Milnor limit") {
  auto r = exact_limit(job_milnor_k2());
  REQUIRE(r.exact_map);
  // z(3+z)/(z-1)
  CHECK(*r.exact_map == rf({q(0), q(3), q(1)}, {q(-1), q(1)}));
  CHECK(r.generic_degree == 4);
  CHECK(r.limit_degree == 2);
  CHECK(r.status == LimitStatus::Converged);
}

TEST_CASE("the family itself degenerates") {
  CHECK_THROWS_AS(exact_limit(job_milnor_k1()), DegenerateLimit);
}

TEST_CASE("regular parameter value gives the specialized map") {
  RescalingJob j = job_milnor_k1();
  j.family.a0 = make_rational(1, 2);
  auto r = exact_limit(j);
  CHECK(*r.exact_map == specialize(milnor_family(), make_rational(1, 2)));
}

TEST_CASE("tracked points") {
  Family fam = milnor_family_spec();
  SUBCASE("period 2 is the exact cycle {0, inf}") {
    auto c = periodic_candidates(specialize(fam.f, make_rational(999, 1000)), 2);
    REQUIRE(c.candidates.size() == 2);
    std::vector<Point> ex;
    for (auto& e : c.exact_candidates) {
      REQUIRE(e);
      ex.push_back(*e);
    }
    CHECK(std::count(ex.begin(), ex.end(), Point::finite(q(0))) == 1);
    CHECK(std::count(ex.begin(), ex.end(), Point::infinity()) == 1);
    auto s = solve_tracked_point(fam, {2, Point::finite(q(0))}, make_rational(999, 1000), 50);
    CHECK(*s.exact == Point::finite(q(0)));
  }
  SUBCASE("period 3 near -1") {
    Rational a = make_rational(999, 1000);
    auto s = solve_tracked_point(fam, {3, Point::finite(q(-1))}, a, 50);
    CHECK(!s.point.inf);
    CHECK(s.residual < Real(1e-20));
    PrecisionScope p(60);
    // Independent check: Newton on the exact polynomial f^3(z) - z.
    RationalFunction g = iterate(specialize(fam.f, a), 3);
    CxPoly P = to_cx(g.num() - g.den() * Poly<Scalar>::x());
    CxPoly dP;
    for (size_t i = 1; i < P.size(); ++i) dP.push_back(P[i] * Cx((long)i));
    Cx z(-1);
    for (int i = 0; i < 60; ++i) z = z - eval(P, z) / eval(dP, z);
    CHECK(abs(z - s.point.z) < Real(1e-18));
    CHECK(abs(z - Cx(-1)) < Real(1e-3));
  }
  SUBCASE("fixed points agree with the exact ones") {
    Rational a = make_rational(1, 3);
    auto c = periodic_candidates(specialize(fam.f, a), 1);
    auto fx = fixed_points(specialize(fam.f, a));
    CHECK((int)c.candidates.size() == fx.total());
  }
}

TEST_CASE("numeric period-3 Milnor limit") {
  auto t0 = std::chrono::steady_clock::now();
  auto r = numeric_limit(job_milnor_k3());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("numeric k3: " << secs << " s, status " << status_name(r.status) << " " << r.message);
  for (auto& n : r.notes) MESSAGE(n);
  REQUIRE(r.status == LimitStatus::Converged);
  CHECK(r.limit_degree == 2);
  REQUIRE(r.num.size() == 3);
  REQUIRE(r.den.size() == 1);
  CHECK(abs(r.num[2] - Cx(1)) < Real(1e-3));
  CHECK(abs(r.num[1]) < Real(1e-3));
  CHECK(abs(r.num[0] - Cx(Real(1) / 4)) < Real(1e-3));
  REQUIRE(r.exact_map);
  CHECK(*r.exact_map == rf({q(1, 4), q(0), q(1)}, {q(1)}));
  CHECK(secs < 30);
}

TEST_CASE("the other normalization gives a conjugate limit") {
  auto r = numeric_limit(job_milnor_k3(Point::finite(q(1))));
  REQUIRE(r.exact_map);
  CHECK(*r.exact_map == rf({q(1, 2), q(0), q(1, 2)}, {q(1)}));
}

TEST_CASE("exact and numeric agree on the period-2 job") {
  auto e = exact_limit(job_milnor_k2());
  auto n = numeric_limit(job_milnor_k2());
  REQUIRE(n.status == LimitStatus::Converged);
  REQUIRE(n.exact_map);
  CHECK(*n.exact_map == *e.exact_map);
  PrecisionScope p(60);
  CxPoly en = to_cx(e.exact_map->num()), ed = to_cx(e.exact_map->den());
  for (size_t i = 0; i < n.num.size(); ++i) CHECK(abs(n.num[i] - en[i]) <= 10 * n.num_err[i] + Real(1e-12));
  for (size_t i = 0; i < n.den.size(); ++i) CHECK(abs(n.den[i] - ed[i]) <= 10 * n.den_err[i] + Real(1e-12));
}

TEST_CASE("misconfigured tracked point is flagged") {
  auto r = numeric_limit(job_milnor_k3_misconfigured());
  MESSAGE(status_name(r.status) << ": " << r.message);
  CHECK(r.status != LimitStatus::Converged);
  CHECK(!r.exact_map);
}

TEST_CASE("conjugation invariance of exact limits") {
  // N(z) = 2z + 1 applied on top of the identity conjugator.
  RescalingJob j = job_milnor_k2();
  ParamCoeff one(1), two(2), zero(0);
  j.conjugator.moebius = ParamMoebius(two, one, zero, one);
  auto r = exact_limit(j);
  MoebiusMap N(q(2), q(1), q(0), q(1));
  CHECK(*r.exact_map == N.conjugate(*exact_limit(job_milnor_k2()).exact_map));
}

TEST_CASE("map formatting") {
  CHECK(to_string(rf({q(0), q(3), q(1)}, {q(-1), q(1)})) == "(z^2 + 3*z)/(z - 1)");
  CHECK(to_string(rf({q(1, 4), q(0), q(1)}, {q(1)})) == "z^2 + 1/4");
}
