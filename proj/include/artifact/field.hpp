#pragma once
// Exact coefficient fields: Q, Q(i), and Q(i, sqrt3) built as a tower of
// quadratic extensions.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace artifact {

using Rational = mpq_class;

inline Rational make_rational(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::optional<Rational> sqrt_exact(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rational(0);
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline int compare(const Rational& x, const Rational& y) { return cmp(x, y); }

// x = a + b*sqrt(D); D must not be a square in Base.
template <class Base, int D>
struct QuadExt {
  Base a, b;

  QuadExt() : a(0), b(0) {}
  QuadExt(long n) : a(n), b(0) {}  // NOLINT
  QuadExt(const Base& x) : a(x), b(0) {}  // NOLINT
  QuadExt(const Base& x, const Base& y) : a(x), b(y) {}

  static QuadExt root() { return QuadExt(Base(0), Base(1)); }

  QuadExt operator-() const { return {-a, -b}; }
  QuadExt& operator+=(const QuadExt& o) { a += o.a; b += o.b; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a -= o.a; b -= o.b; return *this; }
  QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
  QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return {x.a * y.a + Base(D) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  Base norm() const { return a * a - Base(D) * b * b; }
  QuadExt conj_ext() const { return {a, -b}; }
  QuadExt inv() const {
    Base n = norm();
    return {a / n, -b / n};
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

template <class Base, int D>
bool is_zero(const QuadExt<Base, D>& x) { return is_zero(x.a) && is_zero(x.b); }

template <class Base, int D>
int compare(const QuadExt<Base, D>& x, const QuadExt<Base, D>& y) {
  int c = compare(x.a, y.a);
  return c != 0 ? c : compare(x.b, y.b);
}

template <class Base, int D>
std::optional<QuadExt<Base, D>> sqrt_exact(const QuadExt<Base, D>& x) {
  using Q = QuadExt<Base, D>;
  if (is_zero(x)) return Q();
  auto check = [&](const Q& r) -> std::optional<Q> {
    if (r * r == x) return r;
    return std::nullopt;
  };
  if (is_zero(x.b)) {
    if (auto p = sqrt_exact(x.a)) return check(Q(*p));
    if (auto q = sqrt_exact(x.a / Base(D))) return check(Q(Base(0), *q));
    return std::nullopt;
  }
  // (p + q sqrt D)^2 = x  =>  p^2 = (u +- sqrt(u^2 - D v^2)) / 2, q = v / (2p)
  auto s = sqrt_exact(x.a * x.a - Base(D) * x.b * x.b);
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    Base p2 = (x.a + Base(sign) * *s) / Base(2);
    if (is_zero(p2)) continue;
    if (auto p = sqrt_exact(p2)) {
      Base q = x.b / (Base(2) * *p);
      if (auto r = check(Q(*p, q))) return r;
    }
  }
  return std::nullopt;
}

using GaussianRational = QuadExt<Rational, -1>;
// Q(i, sqrt3): every coefficient of every exact map lives here.
using Scalar = QuadExt<GaussianRational, 3>;

inline GaussianRational gauss(const Rational& re, const Rational& im) { return {re, im}; }
inline const GaussianRational I_UNIT{Rational(0), Rational(1)};
inline const Scalar SQRT3 = Scalar::root();

inline Rational re(const GaussianRational& x) { return x.a; }
inline Rational im(const GaussianRational& x) { return x.b; }
inline GaussianRational conj(const GaussianRational& x) { return {x.a, -x.b}; }
inline Scalar conj(const Scalar& x) { return {conj(x.a), conj(x.b)}; }

inline bool is_rational(const Scalar& x) { return is_zero(x.b) && is_zero(x.a.b); }
inline bool is_gaussian(const Scalar& x) { return is_zero(x.b); }

// Total bit size of numerators and denominators.
inline size_t height_bits(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline size_t height_bits(const Scalar& x) {
  return height_bits(x.a.a) + height_bits(x.a.b) + height_bits(x.b.a) + height_bits(x.b.b);
}

std::string to_string(const GaussianRational& x);
std::string to_string(const Scalar& x);

}  // namespace artifact
