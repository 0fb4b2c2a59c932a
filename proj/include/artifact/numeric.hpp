#pragma once
// Arbitrary-precision complex numbers (MPFR reals), polynomial root finding,
// Neville extrapolation and rational snapping.

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

#include "artifact/moebius.hpp"

namespace artifact {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Sets the default MPFR precision (decimal digits) for the current scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);
Rational to_rational(const Real& x);  // exact value of the binary float
std::string to_string(const Real& x, int digits = 20);

struct Cx {
  Real re, im;
  Cx() : re(0), im(0) {}
  Cx(long r) : re(r), im(0) {}  // NOLINT
  Cx(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  Cx operator-() const { return {-re, -im}; }
  friend Cx operator+(const Cx& x, const Cx& y) { return {x.re + y.re, x.im + y.im}; }
  friend Cx operator-(const Cx& x, const Cx& y) { return {x.re - y.re, x.im - y.im}; }
  friend Cx operator*(const Cx& x, const Cx& y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }
  friend Cx operator/(const Cx& x, const Cx& y) {
    Real n = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  Cx& operator+=(const Cx& o) { return *this = *this + o; }
  Cx& operator-=(const Cx& o) { return *this = *this - o; }
  Cx& operator*=(const Cx& o) { return *this = *this * o; }
  Cx& operator/=(const Cx& o) { return *this = *this / o; }
  friend bool operator==(const Cx& x, const Cx& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const Cx& x, const Cx& y) { return !(x == y); }
};

inline bool is_zero(const Cx& x) { return x.re == 0 && x.im == 0; }
Real abs(const Cx& x);
std::string to_string(const Cx& x, int digits = 20);
Cx to_cx(const Rational& q);
Cx to_cx(const Scalar& s);

using CxPoint = ExtendedPoint<Cx>;
using CxMoebius = Moebius<Cx>;
using CxPoly = std::vector<Cx>;  // lowest degree first

CxPoint to_cx(const Point& p);
std::string to_string(const CxPoint& p, int digits = 20);
// Chordal distance on the Riemann sphere.
Real chordal(const CxPoint& p, const CxPoint& q);

CxPoly to_cx(const Poly<Scalar>& p);
Cx eval(const CxPoly& p, const Cx& z);
// Image of a point under num/den, given generic degrees of num and den.
CxPoint eval(const CxPoly& num, const CxPoly& den, const CxPoint& p);

// All roots of p (degree >= 1) by simultaneous Weierstrass iteration, then
// polished with Newton steps.
std::vector<Cx> polynomial_roots(const CxPoly& p);

// Value at t = 0 of the interpolating polynomial through (t_i, y_i).
Cx neville_at_zero(const std::vector<Real>& t, const std::vector<Cx>& y);

// Continued-fraction approximation with denominator <= maxden, accepted when
// within tol of x.
std::optional<Rational> snap_rational(const Real& x, long maxden, const Real& tol);

}  // namespace artifact
