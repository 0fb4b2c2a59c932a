#pragma once
// Reduced rational functions num/den with monic denominator, and points of
// the Riemann sphere.  Infinity is always handled through the chart w = 1/z.

#include <stdexcept>
#include <string>
#include <utility>

#include "artifact/poly.hpp"

namespace artifact {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidFunction : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct NotAFixedPoint : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct DegenerateTriple : AlgebraError {
  using AlgebraError::AlgebraError;
};

template <class K>
struct ExtendedPoint {
  bool inf = false;
  K z{};

  static ExtendedPoint infinity() { return {true, K(0)}; }
  static ExtendedPoint finite(const K& v) { return {false, v}; }
  bool is_inf() const { return inf; }

  friend bool operator==(const ExtendedPoint& p, const ExtendedPoint& q) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return p.z == q.z;
  }
  friend bool operator!=(const ExtendedPoint& p, const ExtendedPoint& q) { return !(p == q); }
};

template <class K>
int compare(const ExtendedPoint<K>& p, const ExtendedPoint<K>& q) {
  if (p.inf || q.inf) return (int)p.inf - (int)q.inf;
  return compare(p.z, q.z);
}

template <class K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const K& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Poly<K>& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static RatFunc identity() { return RatFunc(Poly<K>::x()); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()) < 0 ? 0 : std::max(num_.degree(), den_.degree()); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_identity() const { return *this == identity(); }

  friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.num_.is_zero_poly()) throw InvalidFunction("division by the zero function");
    return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& f, const RatFunc& g) { return f.num_ == g.num_ && f.den_ == g.den_; }
  friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

  // Finite-value evaluation; throws if z is a pole.
  K operator()(const K& z) const {
    K d = den_(z);
    if (is_zero(d)) throw InvalidFunction("evaluation at a pole");
    return num_(z) / d;
  }

  ExtendedPoint<K> eval(const ExtendedPoint<K>& p) const {
    if (p.inf) {
      int dn = num_.degree(), dd = den_.degree();
      if (dn > dd) return ExtendedPoint<K>::infinity();
      if (dn < dd) return ExtendedPoint<K>::finite(K(0));
      return ExtendedPoint<K>::finite(num_.lead() / den_.lead());
    }
    K d = den_(p.z);
    if (is_zero(d)) return ExtendedPoint<K>::infinity();
    return ExtendedPoint<K>::finite(num_(p.z) / d);
  }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // this o g, via homogenization in the degree of this.
  RatFunc compose(const RatFunc& g) const {
    int n = degree();
    if (n == 0) return *this;
    std::vector<Poly<K>> pp(n + 1), qp(n + 1);
    pp[0] = Poly<K>(1);
    qp[0] = Poly<K>(1);
    for (int i = 1; i <= n; ++i) {
      pp[i] = pp[i - 1] * g.num_;
      qp[i] = qp[i - 1] * g.den_;
    }
    Poly<K> N, D;
    for (int i = 0; i <= n; ++i) {
      Poly<K> t = pp[i] * qp[n - i];
      N = N + t.scaled(num_.coeff(i));
      D = D + t.scaled(den_.coeff(i));
    }
    return RatFunc(N, D);
  }

  // Local degree at p: order of vanishing of f - f(p) in charts.
  int local_degree(const ExtendedPoint<K>& p) const {
    if (degree() == 0) throw InvalidFunction("local degree of a constant map");
    ExtendedPoint<K> q = eval(p);
    if (p.inf) {
      if (q.inf) return num_.degree() - den_.degree();
      Poly<K> g = num_ - den_.scaled(q.z);
      return degree() - g.degree();
    }
    if (q.inf) return den_.order_at(p.z);
    return (num_ - den_.scaled(q.z)).order_at(p.z);
  }

  // Derivative at any point, read in the charts z (finite) and w = 1/z (infinity).
  // Along an orbit these multiply to the multiplier of the composite.
  K chart_derivative(const ExtendedPoint<K>& p) const {
    const RatFunc inv(Poly<K>(1), Poly<K>::x());
    ExtendedPoint<K> q = eval(p);
    RatFunc g = p.inf ? compose(inv) : *this;
    if (q.inf) g = inv.compose(g);
    K z = p.inf ? K(0) : p.z;
    K d = g.den_(z);
    return (g.num_.derivative()(z) * d - g.num_(z) * g.den_.derivative()(z)) / (d * d);
  }

  // Multiplier at a fixed point, with the chart w = 1/z at infinity.
  K multiplier(const ExtendedPoint<K>& p) const {
    if (eval(p) != p) throw NotAFixedPoint("point is not fixed");
    if (p.inf) {
      // f(z) ~ (lead ratio) z^(dn-dd): multiplier is the inverse of lim f(z)/z.
      int dn = num_.degree(), dd = den_.degree();
      if (dn > dd + 1) return K(0);
      return den_.lead() / num_.lead();
    }
    const K& z = p.z;
    K d = den_(z);
    return (num_.derivative()(z) * d - num_(z) * den_.derivative()(z)) / (d * d);
  }

 private:
  void reduce() {
    if (den_.is_zero_poly()) throw InvalidFunction("zero denominator");
    if (num_.is_zero_poly()) {
      den_ = Poly<K>(1);
      return;
    }
    Poly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    K l = den_.lead();
    if (l != K(1)) {
      K il = K(1) / l;
      num_ = num_.scaled(il);
      den_ = den_.scaled(il);
    }
  }
  Poly<K> num_, den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) { return f.num().is_zero_poly(); }

template <class K>
RatFunc<K> iterate(const RatFunc<K>& f, int k) {
  if (k <= 0) return RatFunc<K>::identity();
  RatFunc<K> r = f;
  for (int i = 1; i < k; ++i) r = f.compose(r);
  return r;
}

template <class K>
RatFunc<K> compose(const RatFunc<K>& f, const RatFunc<K>& g) { return f.compose(g); }

// Parameter field Q(a) and maps over it.
using ParamCoeff = RatFunc<Rational>;
using ParamRationalFunction = RatFunc<ParamCoeff>;
using RationalFunction = RatFunc<Scalar>;
using Point = ExtendedPoint<Scalar>;

inline Point pt(const Scalar& s) { return Point::finite(s); }
inline Point pt_inf() { return Point::infinity(); }

}  // namespace artifact
