#pragma once
// Moebius maps z -> (az+b)/(cz+d).

#include <optional>

#include "artifact/ratfunc.hpp"

namespace artifact {

template <class K>
struct Moebius {
  K a{1}, b{0}, c{0}, d{1};

  Moebius() = default;
  Moebius(K a_, K b_, K c_, K d_) : a(a_), b(b_), c(c_), d(d_) {
    if (is_zero(a * d - b * c)) throw InvalidFunction("singular Moebius map");
  }
  static Moebius identity() { return {}; }

  K det() const { return a * d - b * c; }

  ExtendedPoint<K> operator()(const ExtendedPoint<K>& p) const {
    if (p.inf) {
      if (is_zero(c)) return ExtendedPoint<K>::infinity();
      return ExtendedPoint<K>::finite(a / c);
    }
    K den = c * p.z + d;
    if (is_zero(den)) return ExtendedPoint<K>::infinity();
    return ExtendedPoint<K>::finite((a * p.z + b) / den);
  }

  // this o o
  Moebius operator*(const Moebius& o) const {
    return Moebius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Moebius inverse() const { return Moebius(d, -b, -c, a); }

  bool is_identity() const { return is_zero(b) && is_zero(c) && a == d; }

  RatFunc<K> as_function() const {
    return RatFunc<K>(Poly<K>(std::vector<K>{b, a}), Poly<K>(std::vector<K>{d, c}));
  }

  // M o f o M^-1
  RatFunc<K> conjugate(const RatFunc<K>& f) const {
    return as_function().compose(f.compose(inverse().as_function()));
  }

  // Unique map sending p -> inf, q -> 0, r -> 1.
  static Moebius from_triple(const ExtendedPoint<K>& p, const ExtendedPoint<K>& q, const ExtendedPoint<K>& r) {
    if (p == q || q == r || p == r) throw DegenerateTriple("coincident points");
    if (p.inf) return Moebius(K(1), -q.z, K(0), r.z - q.z);
    if (q.inf) return Moebius(K(0), r.z - p.z, K(1), -p.z);
    if (r.inf) return Moebius(K(1), -q.z, K(1), -p.z);
    return Moebius(r.z - p.z, -q.z * (r.z - p.z), r.z - q.z, -p.z * (r.z - q.z));
  }

  // Map sending (p, q, r) to (P, Q, R).
  static Moebius from_triples(const ExtendedPoint<K>& p, const ExtendedPoint<K>& q, const ExtendedPoint<K>& r,
                              const ExtendedPoint<K>& P, const ExtendedPoint<K>& Q, const ExtendedPoint<K>& R) {
    return from_triple(P, Q, R).inverse() * from_triple(p, q, r);
  }

  // Smallest k <= bound with M^k = id, if any.
  std::optional<int> order(int bound = 64) const {
    Moebius m = *this;
    for (int k = 1; k <= bound; ++k) {
      if (m.is_identity()) return k;
      m = m * *this;
    }
    return std::nullopt;
  }
};

// Degree-1 rational function as a Moebius map.
template <class K>
std::optional<Moebius<K>> as_moebius(const RatFunc<K>& f) {
  if (f.degree() != 1) return std::nullopt;
  return Moebius<K>(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
}

using MoebiusMap = Moebius<Scalar>;

}  // namespace artifact
