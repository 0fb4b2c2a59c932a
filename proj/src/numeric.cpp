#include "artifact/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace artifact {

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}
PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational to_rational(const Real& x) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.backend().data());
  Rational q(m);
  if (e >= 0) {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), 2, e);
    q *= s;
  } else {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), 2, -e);
    q /= s;
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Real abs(const Cx& x) { return boost::multiprecision::hypot(x.re, x.im); }

std::string to_string(const Cx& x, int digits) {
  return "(" + to_string(x.re, digits) + ", " + to_string(x.im, digits) + ")";
}

Cx to_cx(const Rational& q) { return Cx(to_real(q)); }

Cx to_cx(const Scalar& s) {
  Real r3 = boost::multiprecision::sqrt(Real(3));
  return Cx(to_real(s.a.a) + to_real(s.b.a) * r3, to_real(s.a.b) + to_real(s.b.b) * r3);
}

CxPoint to_cx(const Point& p) { return p.inf ? CxPoint::infinity() : CxPoint::finite(to_cx(p.z)); }

std::string to_string(const CxPoint& p, int digits) { return p.inf ? "inf" : to_string(p.z, digits); }

Real chordal(const CxPoint& p, const CxPoint& q) {
  if (p.inf && q.inf) return Real(0);
  if (p.inf || q.inf) {
    const Cx& z = p.inf ? q.z : p.z;
    return 2 / boost::multiprecision::sqrt(1 + z.re * z.re + z.im * z.im);
  }
  Real a = 1 + p.z.re * p.z.re + p.z.im * p.z.im;
  Real b = 1 + q.z.re * q.z.re + q.z.im * q.z.im;
  return 2 * abs(p.z - q.z) / boost::multiprecision::sqrt(a * b);
}

CxPoly to_cx(const Poly<Scalar>& p) {
  CxPoly out;
  for (const auto& c : p.coeffs()) out.push_back(to_cx(c));
  return out;
}

Cx eval(const CxPoly& p, const Cx& z) {
  Cx r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
  return r;
}

namespace {
int cx_degree(const CxPoly& p) {
  int d = (int)p.size() - 1;
  while (d >= 0 && is_zero(p[d])) --d;
  return d;
}
}  // namespace

CxPoint eval(const CxPoly& num, const CxPoly& den, const CxPoint& p) {
  int dn = cx_degree(num), dd = cx_degree(den);
  if (p.inf) {
    if (dn > dd) return CxPoint::infinity();
    if (dn < dd) return CxPoint::finite(Cx(0));
    return CxPoint::finite(num[dn] / den[dd]);
  }
  Cx d = eval(den, p.z);
  if (is_zero(d)) return CxPoint::infinity();
  return CxPoint::finite(eval(num, p.z) / d);
}

std::vector<Cx> polynomial_roots(const CxPoly& p0) {
  int n = cx_degree(p0);
  if (n < 1) return {};
  CxPoly p(p0.begin(), p0.begin() + n + 1);
  Cx lead = p[n];
  for (auto& c : p) c = c / lead;
  // Initial guesses on a circle enclosing all roots.
  Real R = 1;
  for (int i = 0; i < n; ++i) R = std::max(R, 1 + abs(p[i]));
  std::vector<Cx> z(n);
  Cx w(Real("0.4"), Real("0.9"));
  Cx s(1);
  for (int i = 0; i < n; ++i) {
    z[i] = s * Cx(R);
    s = s * w;
  }
  Real eps = boost::multiprecision::pow(Real(10), -(int)Real::default_precision() + 5);
  for (int it = 0; it < 2000; ++it) {
    Real change = 0;
    for (int i = 0; i < n; ++i) {
      Cx d(1);
      for (int j = 0; j < n; ++j)
        if (j != i) d = d * (z[i] - z[j]);
      if (is_zero(d)) d = Cx(eps);
      Cx step = eval(p, z[i]) / d;
      z[i] -= step;
      change = std::max(change, abs(step) / (1 + abs(z[i])));
    }
    if (change < eps) break;
  }
  CxPoly dp;
  for (int i = 1; i <= n; ++i) dp.push_back(p[i] * Cx(i));
  for (auto& r : z)
    for (int it = 0; it < 8; ++it) {
      Cx d = eval(dp, r);
      if (is_zero(d)) break;
      r -= eval(p, r) / d;
    }
  return z;
}

Cx neville_at_zero(const std::vector<Real>& t, const std::vector<Cx>& y) {
  std::vector<Cx> P = y;
  size_t n = t.size();
  for (size_t m = 1; m < n; ++m)
    for (size_t i = 0; i + m < n; ++i)
      P[i] = (Cx(t[i + m]) * P[i] - Cx(t[i]) * P[i + 1]) / Cx(t[i + m] - t[i]);
  return P[0];
}

std::optional<Rational> snap_rational(const Real& x, long maxden, const Real& tol) {
  Rational q = to_rational(x);
  // Convergents h/k of the continued fraction of q.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  mpz_class num = q.get_num(), den = q.get_den();
  std::optional<Rational> best;
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > maxden) break;
    Rational c(h2, k2);
    c.canonicalize();
    best = c;
    if (boost::multiprecision::abs(to_real(c) - x) <= tol) return c;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  if (best && boost::multiprecision::abs(to_real(*best) - x) <= tol) return best;
  return std::nullopt;
}

}  // namespace artifact
