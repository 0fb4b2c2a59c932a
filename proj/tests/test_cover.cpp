#include <random>

#include "artifact/bicritical.hpp"
#include "artifact/fixtures.hpp"
#include "artifact/moebius.hpp"
#include "artifact/numeric.hpp"
#include "artifact/param.hpp"
#include "doctest.h"
#include "random_covers.hpp"

using namespace artifact;

namespace {
std::string dump(const std::vector<Violation>& vs) {
  std::string s;
  for (const auto& v : vs) s += v.kind + ": " + v.detail + "\n";
  return s;
}
bool has_kind(const std::vector<Violation>& vs, const std::string& kind, const std::string& needle = "") {
  for (const auto& v : vs)
    if (v.kind == kind && v.detail.find(needle) != std::string::npos) return true;
  return false;
}
Scalar S(long n, long d = 1) { return to_scalar(make_rational(n, d)); }

Portrait bicritical_portrait() {
  return fixtures::make_portrait(2,
                                 {{"c", "v", 2}, {"c1", "v1", 2}, {"p", "p", 1}, {"q", "p", 1}, {"r", "r", 1},
                                  {"s", "r", 1}, {"v", "u", 1}, {"t", "u", 1}},
                                 {});
}

// Number of distinct solutions of f(z) = b, counted numerically.
int fiber_count(const RationalFunction& f, const Scalar& b) {
  PrecisionScope ps(40);
  auto g = f.num() - f.den() * Poly<Scalar>(std::vector<Scalar>{b});
  auto roots = polynomial_roots(to_cx(g));
  int n = 0;
  for (size_t i = 0; i < roots.size(); ++i) {
    bool dup = false;
    for (size_t j = 0; j < i; ++j) dup |= abs(roots[i] - roots[j]) < Real("1e-20");
    n += !dup;
  }
  return n;
}
}  // namespace

TEST_CASE("portrait validation") {
  auto P = bicritical_portrait();
  CHECK_MESSAGE(validate_portrait(P).empty(), dump(validate_portrait(P)));
  CHECK(P.critical() == std::vector<Label>{"c", "c1"});

  auto Q = P;
  Q.deg["c1"] = 1;
  auto vs = validate_portrait(Q);
  CHECK(has_kind(vs, "riemann_hurwitz", "critical sum = 1 != 2d-2 = 2"));

  auto R = P;
  R.F["s"] = "p";
  vs = validate_portrait(R);
  CHECK(has_kind(vs, "fiber", "fiber over p has total degree 3"));
  CHECK(has_kind(vs, "fiber", "fiber over r"));

  auto M = P;
  M.X = {"p", "zz"};
  CHECK(has_kind(validate_portrait(M), "marking", "zz"));
}

TEST_CASE("portraits read off explicit quadratic maps validate") {
  // f = A o z^2 o B: critical points B^-1(0), B^-1(inf), critical values
  // A(0), A(inf); Z adds A(s^2), whose preimages are B^-1(+-s).
  std::mt19937 rng(7);
  auto rnd = [&] { return S(long(rng() % 11) - 5, 1 + long(rng() % 3)); };
  for (int trial = 0; trial < 30; ++trial) {
    Moebius<Scalar> A, B;
    for (;;) {
      try {
        A = Moebius<Scalar>(rnd(), rnd(), rnd(), rnd());
        B = Moebius<Scalar>(rnd(), rnd(), rnd(), rnd());
        break;
      } catch (const InvalidFunction&) {
      }
    }
    RationalFunction f = A.as_function().compose(RationalFunction(Poly<Scalar>(std::vector<Scalar>{S(0), S(0), S(1)}), Poly<Scalar>(std::vector<Scalar>{S(1)}))
                                                     .compose(B.as_function()));
    REQUIRE(f.degree() == 2);
    std::vector<Point> ys{B.inverse()(pt(S(0))), B.inverse()(Point::infinity())};
    for (long s = 1; s <= 3; ++s) {
      ys.push_back(B.inverse()(pt(S(s))));
      ys.push_back(B.inverse()(pt(S(-s))));
    }
    std::vector<Point> zs;
    for (const auto& y : ys) {
      Point z = f.eval(y);
      if (std::find(zs.begin(), zs.end(), z) == zs.end()) zs.push_back(z);
    }
    REQUIRE(zs.size() == 5);
    Portrait P;
    P.d = 2;
    auto zlabel = [&](const Point& z) { return "z" + std::to_string(std::find(zs.begin(), zs.end(), z) - zs.begin()); };
    for (size_t i = 0; i < zs.size(); ++i) P.Z.insert("z" + std::to_string(i));
    for (size_t i = 0; i < ys.size(); ++i) {
      Label y = "y" + std::to_string(i);
      P.Y.insert(y);
      P.F[y] = zlabel(f.eval(ys[i]));
      int k = f.local_degree(ys[i]);
      if (k > 1) P.deg[y] = k;
    }
    CHECK_MESSAGE(validate_portrait(P).empty(), dump(validate_portrait(P)));
    CHECK(P.critical().size() == 2);
  }
}

TEST_CASE("cover validation examples") {
  auto S1 = fixtures::single_square();
  CHECK(validate_cover(S1.cover).empty());
  CHECK(global_degree(S1.cover) == 2);

  auto moved = S1.cover;
  moved.target.attach["V"]["zero"] = pt(S(5));
  auto vs = validate_cover(moved);
  CHECK(has_kind(vs, "compatibility", "f_v o i_v != i_w o F at edge V-zero"));

  auto S3 = fixtures::fig3_two_cycles();
  CHECK_MESSAGE(validate_cover(S3.cover).empty(), dump(validate_cover(S3.cover)));
  CHECK(global_degree(S3.cover) == 2);
}

TEST_CASE("global degree of a degree-3 bicritical cover") {
  const std::string w = "-1/2,0,0,1/2", w2 = "-1/2,0,0,-1/2";
  Portrait P = fixtures::make_portrait(3,
                                       {{"zero", "zero", 3}, {"inf", "inf", 3}, {"one", "one", 1},
                                        {"w", "one", 1}, {"w2", "one", 1}},
                                       {});
  auto Y = fixtures::make_tree({{"V", {{"zero", "0"}, {"inf", "inf"}, {"one", "1"}, {"w", w}, {"w2", w2}}}});
  auto Z = fixtures::make_tree({{"V", {{"zero", "0"}, {"inf", "inf"}, {"one", "1"}}}});
  auto C = fixtures::make_cover(P, Y, Z, {{"V", "V", {"0", "0", "0", "1"}, {"1"}}});
  CHECK_MESSAGE(validate_cover(C).empty(), dump(validate_cover(C)));
  CHECK(global_degree(C) == 3);
  CHECK(fiber_count(C.maps.at("V"), S(2)) == 3);

  auto bad = C;
  bad.maps["V"] = RationalFunction(Poly<Scalar>(std::vector<Scalar>{S(0), S(0), S(1)}), Poly<Scalar>(std::vector<Scalar>{S(1)}));
  CHECK(!validate_cover(bad).empty());
}

TEST_CASE("Riemann-Hurwitz examples") {
  auto S3 = fixtures::fig3_two_cycles();
  const auto& C = S3.cover;
  const CombTree& TY = C.source.tree;
  const CombTree& TZ = C.target.tree;

  SUBCASE("branch without critical leaf") {
    auto tb = TZ.branch("W", "VB");
    for (const auto& comp : preimage_components(C, tb)) {
      auto r = rh_check(C, tb, comp);
      CHECK(r.holds());
      if (C.critical_leaves_in(comp.interior).empty()) {
        CHECK(r.chi_source == 1);
        CHECK(r.degree == 1);
      }
    }
  }
  SUBCASE("branch with one simple critical leaf mapping with degree 2") {
    // branch of VA toward R0 holds c
    auto b = TY.branch("VA", "R0");
    REQUIRE(C.critical_leaves_in(b.interior) == std::vector<Label>{"c"});
    auto tb = TZ.branch(C.image("VA"), C.image("R0"));
    bool seen = false;
    for (const auto& comp : preimage_components(C, tb)) {
      if (!(comp == b)) continue;
      seen = true;
      auto r = rh_check(C, tb, comp);
      CHECK(r.chi_source == 1);
      CHECK(r.degree == 2);
      CHECK(r.chi_target == 1);
      CHECK(r.critical_multiplicity == 1);
      CHECK(r.holds());
    }
    CHECK(seen);
  }
  SUBCASE("annulus closure of degree 1") {
    auto ta = TZ.annulus("W", "R4");
    for (const auto& comp : preimage_components(C, ta)) {
      auto r = rh_check(C, ta, comp);
      CHECK(r.holds());
      CHECK(r.chi_target == 0);
    }
  }
  SUBCASE("a non-component is rejected") {
    auto tb = TZ.branch("W", "VB");
    CHECK_THROWS_AS(rh_check(C, tb, TY.branch("W", "VA")), InvalidQuery);
  }
}

TEST_CASE("Riemann-Hurwitz suite on the corpus") {
  for (const auto& list : {&fixtures::system_fixtures(), &fixtures::skeleton_fixtures()})
    for (const auto& fx : *list) {
      INFO(fx.name);
      auto rep = rh_suite(fx.build().cover);
      std::string msg;
      for (const auto& f : rep.failures) msg += f + "\n";
      CHECK_MESSAGE(rep.ok(), msg);
      CHECK(rep.branches > 0);
      CHECK(rep.components > 0);
    }
}

TEST_CASE("branch images") {
  auto sq = fixtures::single_square().cover;
  auto leaf = map_branch(sq, "V", "one");
  CHECK(leaf.applicable);
  CHECK(leaf.image.interior == std::set<VertexId>{"one"});
  CHECK(leaf.degree == 1);
  CHECK(leaf.bijective);
  auto crit = map_branch(sq, "V", "zero");
  CHECK(crit.degree == 2);
  CHECK(crit.attaching_point == pt(S(0)));

  auto C = fixtures::fig3_two_cycles().cover;
  auto b = map_branch(C, "VA", "R0");
  CHECK(b.applicable);
  CHECK(b.degree == 2);
  CHECK(b.image_vertex == "VB");
  CHECK(b.attaching_point == C.target.a("VB", C.portrait.F.at("c")));
  CHECK(b.onto);
  auto two = map_branch(C, "W", "VA");
  CHECK(!two.applicable);
  auto free = map_branch(C, "VB", "R1");
  CHECK(free.degree == 1);
  CHECK(free.bijective);
}

TEST_CASE("annulus images") {
  auto C = fixtures::fig3_two_cycles().cover;
  auto a = map_annulus(C, "W", "R4");
  CHECK(a.applicable);
  CHECK(a.degree == 1);
  CHECK(a.spine_degree_one);
  CHECK(a.bijective_on_closure);
  CHECK(a.image == C.target.tree.annulus(C.image("W"), C.image("R4")));

  auto adj = map_annulus(C, "R1", "VB");
  CHECK(adj.applicable);
  CHECK(adj.image.interior.empty());
  CHECK(adj.image.boundary_edges == std::set<Edge>{make_edge(C.image("R1"), C.image("VB"))});

  auto fig1 = fixtures::fig1_counterexample().cover;
  auto crit = map_annulus(fig1, "G", "black0");
  CHECK(crit.applicable);
  CHECK(crit.degree == 2);
  CHECK(!crit.spine_degree_one);
  // oracle: the local degree at the first spine edge is the fibre count near
  // its attaching point, i.e. the multiplicity of the point as a root of f - f(p)
  auto sp = fig1.source.tree.path("G", "black0");
  CHECK(fig1.maps.at(sp[0]).local_degree(fig1.source.att(sp[0], sp[1])) == 2);

  auto bad = map_annulus(C, "W", "R0");
  CHECK(!bad.applicable);
}

TEST_CASE("random bicritical covers") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    auto rc = testing::random_bicritical_cover(rng, 4 + trial % 6);
    const auto& C = rc.cover;
    INFO("trial " << trial);
    auto vs = validate_cover(C);
    REQUIRE_MESSAGE(vs.empty(), dump(vs));
    CHECK(global_degree(C) == 2);
    CHECK(rh_suite(C).ok());

    std::set<VertexId> crit;
    for (const auto& v : C.source.tree.internal_vertices())
      if (C.vertex_degree(v) >= 2) crit.insert(v);
    CHECK(crit == rc.critical_vertices);
    auto p = critical_path(C);
    std::set<VertexId> inner(p.begin() + 1, p.end() - 1);
    CHECK(inner == crit);

    for (const auto& v : C.source.tree.internal_vertices())
      for (const auto& nb : C.source.tree.neighbors(v)) {
        auto b = C.source.tree.branch(v, nb);
        if (!C.critical_leaves_in(b.interior).empty()) continue;
        auto im = map_branch(C, v, nb);
        CHECK(im.degree == 1);
        CHECK(im.bijective);
        CHECK(im.image == C.target.tree.branch(C.image(v), C.image(nb)));
      }
  }
}

TEST_CASE("a critical vertex off the critical path is reported") {
  auto C = fixtures::fig3_two_cycles().cover;
  CHECK_NOTHROW(critical_path(C));
  auto bad = fixtures::single_square().cover;
  bad.portrait.deg["one"] = 2;
  CHECK_THROWS_AS(critical_path(bad), StructuralViolation);
}
