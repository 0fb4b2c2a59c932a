#include <random>

#include "artifact/moebius.hpp"
#include "artifact/param.hpp"
#include "artifact/roots.hpp"
#include "doctest.h"

using namespace artifact;

namespace {
using RF = RationalFunction;
using P = Poly<Scalar>;
Scalar S(long n, long d = 1) { return to_scalar(make_rational(n, d)); }
P poly(std::initializer_list<long> cs) {
  std::vector<Scalar> v;
  for (long c : cs) v.push_back(S(c));
  return P(v);
}
RF rf(std::initializer_list<long> n, std::initializer_list<long> d) { return RF(poly(n), poly(d)); }
const RF Z = RF::identity();
}  // namespace

TEST_CASE("reduce cancels common factors and normalizes the denominator") {
  CHECK(rf({-1, 0, 1}, {-1, 1}) == rf({1, 1}, {1}));
  RF f = rf({0, 2}, {4, 2});
  CHECK(f.den().lead() == S(1));
  CHECK(f.num() == poly({0, 1}));
  CHECK(f * (RF(1) / f) == RF(1));
  CHECK_THROWS_AS(RF(poly({1}), P()), InvalidFunction);
}

TEST_CASE("parameter content cancels") {
  ParamCoeff a = param_a(), one(1);
  using PP = Poly<ParamCoeff>;
  ParamRationalFunction g(PP(std::vector<ParamCoeff>{ParamCoeff(0), one - a}), PP(std::vector<ParamCoeff>{one - a}));
  CHECK(g == ParamRationalFunction::identity());
}

TEST_CASE("composition and iteration") {
  RF sq = rf({0, 0, 1}, {1});
  CHECK(sq.compose(sq) == rf({0, 0, 0, 0, 1}, {1}));
  CHECK(iterate(sq, 3).num() == P(std::vector<Scalar>(8, S(0))) + P(std::vector<Scalar>{S(0), S(0), S(0), S(0), S(0), S(0), S(0), S(0), S(1)}));
  RF f = rf({1, 2, 3}, {5, 0, 1});
  CHECK(f.compose(Z) == f);
  CHECK(Z.compose(f) == f);
  CHECK(iterate(f, 1) == f);
  CHECK(iterate(f, 0) == Z);
}

TEST_CASE("Milnor family two-cycle") {
  ParamRationalFunction fa = milnor_family();
  ParamRationalFunction f2 = iterate(fa, 2);
  ExtendedPoint<ParamCoeff> zero = ExtendedPoint<ParamCoeff>::finite(ParamCoeff(0));
  CHECK(fa.eval(zero).is_inf());
  CHECK(fa.eval(ExtendedPoint<ParamCoeff>::infinity()) == zero);
  CHECK(f2.eval(zero) == zero);
  CHECK(f2.multiplier(zero) == ParamCoeff(-3));
  auto lim = limit_at_param(f2, Rational(1));
  CHECK(lim.map == rf({0, 3, 1}, {-1, 1}));
  CHECK(lim.generic_degree == 4);
  CHECK(lim.limit_degree == 2);
}

TEST_CASE("limit of a constant-in-a family and a forced limit") {
  RF g = rf({1, 2, 3}, {5, 0, 1});
  std::vector<ParamCoeff> n, d;
  for (auto& c : g.num().coeffs()) n.push_back(ParamCoeff(c.a.a));
  for (auto& c : g.den().coeffs()) d.push_back(ParamCoeff(c.a.a));
  ParamRationalFunction G{Poly<ParamCoeff>(n), Poly<ParamCoeff>(d)};
  CHECK(limit_at_param(G, Rational(7)).map == g);
  ParamCoeff a = param_a(), one(1);
  using PP = Poly<ParamCoeff>;
  ParamRationalFunction h(PP(std::vector<ParamCoeff>{ParamCoeff(0), one, a - one}), PP(std::vector<ParamCoeff>{one, a - one}));
  CHECK(limit_at_param(h, Rational(1)).map == Z);
}

TEST_CASE("evaluation at infinity and poles") {
  RF fa1 = limit_at_param(milnor_family(), Rational(2)).map;
  CHECK(fa1.eval(pt(S(0))).is_inf());
  CHECK(fa1.eval(pt_inf()) == pt(S(0)));
  CHECK(Z.eval(pt_inf()).is_inf());
}

TEST_CASE("derivative") {
  CHECK(rf({0, 0, 1}, {1}).derivative() == rf({0, 2}, {1}));
  CHECK(RF(S(5)).derivative() == RF(0));
  // z(z+alpha)/(beta z + 1) has derivative alpha at 0
  RF f = rf({0, 7, 1}, {1, 3});
  CHECK(f.derivative()(S(0)) == S(7));
}

TEST_CASE("fixed points and multipliers") {
  RF sq = rf({0, 0, 1}, {1});
  auto fp = fixed_points(sq);
  CHECK(fp.complete());
  CHECK(fp.total() == 3);
  CHECK(sq.multiplier(pt(S(0))) == S(0));
  CHECK(sq.multiplier(pt(S(1))) == S(2));
  CHECK(sq.multiplier(pt_inf()) == S(0));
  RF g = rf({0, 2, 1}, {1, 3});  // alpha = 2, beta = 3
  auto gp = fixed_points(g);
  CHECK(gp.total() == 3);
  bool half = false;
  for (auto& [p, m] : gp.roots) half |= (p == pt(S(1, 2)));
  CHECK(half);
  RF par = rf({0, 3, 1}, {-1, 1});
  auto pp = fixed_points(par);
  int minf = 0;
  for (auto& [p, m] : pp.roots)
    if (p.is_inf()) minf = m;
  CHECK(minf == 2);
  CHECK(par.multiplier(pt_inf()) == S(1));
  CHECK_THROWS_AS(sq.multiplier(pt(S(3))), NotAFixedPoint);
}

TEST_CASE("critical points") {
  RF fa2 = limit_at_param(milnor_family(), Rational(2)).map;
  auto cp = critical_points(fa2);
  CHECK(cp.complete());
  std::vector<Point> pts;
  for (auto& [p, m] : cp.roots) pts.push_back(p);
  CHECK(pts.size() == 2);
  CHECK(((pts[0] == pt(S(-2)) && pts[1] == pt(S(6))) || (pts[1] == pt(S(-2)) && pts[0] == pt(S(6)))));
  auto c2 = critical_points(rf({0, 0, 1}, {1}));
  CHECK(c2.total() == 2);
  auto c3 = critical_points(rf({1, 0, 1}, {0, 1}));
  CHECK(c3.roots.size() == 2);
  CHECK(c3.total() == 2);
}

TEST_CASE("exact square roots in the tower") {
  CHECK(sqrt_exact(S(-3)).has_value());
  CHECK(*sqrt_exact(S(-3)) * *sqrt_exact(S(-3)) == S(-3));
  CHECK(!sqrt_exact(S(2)).has_value());
  Scalar w = (S(-1) + SQRT3 * Scalar(I_UNIT)) / S(2);
  CHECK(w * w * w == S(1));
  auto r = sqrt_exact(w);
  REQUIRE(r.has_value());
  CHECK(*r * *r == w);
}

TEST_CASE("Moebius from triples") {
  using M = MoebiusMap;
  CHECK(M::from_triple(pt_inf(), pt(S(0)), pt(S(1))).is_identity());
  M inv = M::from_triple(pt(S(0)), pt_inf(), pt(S(1)));
  CHECK(inv.as_function() == RF(poly({1}), poly({0, 1})));
  // closed form ((z+a)/(z-3a)) * ((p-3a)/(p+a)) at a = 2, p = -1
  M m = M::from_triple(pt(S(6)), pt(S(-2)), pt(S(-1)));
  RF closed = rf({2, 1}, {-6, 1}) * RF(S(-7) / S(1));
  CHECK(m.as_function() == closed);
  CHECK_THROWS_AS(M::from_triple(pt(S(1)), pt(S(1)), pt(S(2))), DegenerateTriple);
  CHECK(M(S(-1), S(0), S(0), S(1)).order() == 2);
  CHECK(!M(S(2), S(0), S(0), S(1)).order().has_value());
}

TEST_CASE("random properties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto rq = [&]() {
    long n = coef(rng);
    long d = 1 + std::abs(coef(rng));
    return S(n, d);
  };
  SUBCASE("compose degree") {
    int cancel = 0;
    for (int t = 0; t < 100; ++t) {
      RF f(P({rq(), rq(), rq()}), P({rq(), rq(), S(1)}));
      RF g(P({rq(), rq()}), P({rq(), rq(), S(1)}));
      if (f.degree() == 0 || g.degree() == 0) continue;
      RF h = f.compose(g);
      if (h.degree() != f.degree() * g.degree()) ++cancel;
    }
    CHECK(cancel == 0);
  }
  SUBCASE("critical multiplicities") {
    for (int t = 0; t < 50; ++t) {
      RF f(P({rq(), rq(), rq()}), P({rq(), rq(), S(1)}));
      if (f.degree() < 2) continue;
      auto cp = critical_points(f);
      CHECK(cp.total() == 2 * f.degree() - 2);
    }
  }
  SUBCASE("triple normalization") {
    for (int t = 0; t < 50; ++t) {
      Point p = pt(rq()), q = pt(rq()), r = pt(rq());
      if (p == q || q == r || p == r) continue;
      MoebiusMap m = MoebiusMap::from_triple(p, q, r);
      CHECK(m(p).is_inf());
      CHECK(m(q) == pt(S(0)));
      CHECK(m(r) == pt(S(1)));
    }
  }
}
