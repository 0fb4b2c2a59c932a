#include "artifact/param.hpp"

namespace artifact {

Rational specialize(const ParamCoeff& c, const Rational& a0) {
  Rational d = c.den()(a0);
  if (is_zero(d)) throw CoefficientPole("coefficient has a pole at a0");
  return c.num()(a0) / d;
}

RationalFunction specialize(const ParamRationalFunction& f, const Rational& a0) {
  auto conv = [&](const Poly<ParamCoeff>& p) {
    std::vector<Scalar> cs;
    for (const auto& c : p.coeffs()) cs.push_back(to_scalar(specialize(c, a0)));
    return Poly<Scalar>(std::move(cs));
  };
  Poly<Scalar> d = conv(f.den());
  if (d.is_zero_poly()) throw DegenerateLimit("denominator vanishes at a0");
  return RationalFunction(conv(f.num()), d);
}

LimitInfo limit_at_param(const ParamRationalFunction& f, const Rational& a0) {
  // Common denominator of all coefficients, as a polynomial in a.
  Poly<Rational> L(1);
  for (const auto* p : {&f.num(), &f.den()})
    for (const auto& c : p->coeffs()) L = L / gcd(L, c.den()) * c.den();
  auto clear = [&](const Poly<ParamCoeff>& p) {
    std::vector<Poly<Rational>> out;
    for (const auto& c : p.coeffs()) out.push_back(c.num() * (L / c.den()));
    return out;
  };
  std::vector<Poly<Rational>> N = clear(f.num()), D = clear(f.den());
  int m = -1;
  for (const auto* v : {&N, &D})
    for (const auto& c : *v)
      if (!c.is_zero_poly()) {
        int o = c.order_at(a0);
        m = m < 0 ? o : std::min(m, o);
      }
  if (m < 0) throw DegenerateLimit("zero map");
  Poly<Rational> lin = Poly<Rational>::linear_root(a0).pow(m);
  auto spec = [&](const std::vector<Poly<Rational>>& v) {
    std::vector<Scalar> cs;
    for (const auto& c : v) cs.push_back(to_scalar((c / lin)(a0)));
    return Poly<Scalar>(std::move(cs));
  };
  Poly<Scalar> n = spec(N), d = spec(D);
  if (d.is_zero_poly()) {
    if (n.is_zero_poly()) throw DegenerateLimit("specialization is 0/0 identically");
    throw DegenerateLimit("limit is the constant map infinity");
  }
  LimitInfo info{RationalFunction(n, d), m, f.degree(), 0};
  info.limit_degree = info.map.degree();
  return info;
}

ParamRationalFunction milnor_family() {
  ParamCoeff a = param_a();
  ParamCoeff one(1), three(3);
  using PP = Poly<ParamCoeff>;
  PP num(std::vector<ParamCoeff>{-(one + three * a) * a, one + three * a});
  PP den(std::vector<ParamCoeff>{ParamCoeff(0), (one - a) * three * a, one - a});
  return ParamRationalFunction(num, den);
}

}  // namespace artifact

namespace artifact {

namespace {
using QP = Poly<Rational>;
using BiPoly = std::vector<QP>;  // coefficients in z, each a polynomial in a

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero_poly()) p.pop_back();
}

BiPoly clear_denominators(const Poly<ParamCoeff>& p) {
  QP L(1);
  for (const auto& c : p.coeffs()) L = L / gcd(L, c.den()) * c.den();
  BiPoly out;
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (L / c.den()));
  return out;
}

BiPoly primitive(BiPoly p) {
  trim(p);
  QP g;
  for (const auto& c : p) g = gcd(g, c);
  if (g.degree() <= 0) return p;
  for (auto& c : p) c = c / g;
  return p;
}

// Pseudo-remainder of a by b.
BiPoly prem(BiPoly a, const BiPoly& b) {
  int db = (int)b.size() - 1;
  const QP& lb = b.back();
  while ((int)a.size() - 1 >= db && !a.empty()) {
    int da = (int)a.size() - 1;
    QP la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
    trim(a);
  }
  return a;
}
}  // namespace

Poly<ParamCoeff> gcd(Poly<ParamCoeff> a, Poly<ParamCoeff> b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  BiPoly A = primitive(clear_denominators(a)), B = primitive(clear_denominators(b));
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    BiPoly R = primitive(prem(A, B));
    A = std::move(B);
    B = std::move(R);
  }
  std::vector<ParamCoeff> cs;
  for (const auto& c : A) cs.push_back(ParamCoeff(c));
  return Poly<ParamCoeff>(std::move(cs)).monic();
}

}  // namespace artifact
