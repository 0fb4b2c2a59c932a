#pragma once
// Dense univariate polynomials over an exact field, lowest degree first.

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artifact/field.hpp"

namespace artifact {

template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(long c) { if (c != 0) c_.push_back(K(c)); }  // NOLINT
  Poly(const K& c) { if (!is_zero(c)) c_.push_back(c); }  // NOLINT
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }
  // z - r
  static Poly linear_root(const K& r) { return Poly(std::vector<K>{-r, K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : K(0); }
  const K& lead() const { return c_.back(); }

  K operator()(const K& z) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<K> r(std::max(p.c_.size(), q.c_.size()), K(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.c_.empty() || q.c_.empty()) return Poly();
    std::vector<K> r(p.c_.size() + q.c_.size() - 1, K(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }
  Poly scaled(const K& s) const {
    Poly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly pow(int n) const {
    Poly r(1), b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  // Euclidean division: *this = q * d + r.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero_poly()) throw std::domain_error("polynomial division by zero");
    std::vector<K> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<K> quo(degree() - dd + 1, K(0));
    K inv_lead = K(1) / d.lead();
    for (int i = degree(); i >= dd; --i) {
      if (is_zero(rem[i])) continue;
      K t = rem[i] * inv_lead;
      quo[i - dd] = t;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= t * d.c_[j];
    }
    rem.resize(dd);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const {
    if (c_.empty()) return *this;
    return scaled(K(1) / lead());
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K((long)i);
    return Poly(std::move(r));
  }

  // p(q(z))
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
  }

  // Order of vanishing at z = r (0 for the zero polynomial is not meaningful).
  int order_at(const K& r) const {
    if (c_.empty()) return -1;
    int k = 0;
    Poly p = *this;
    Poly lin = linear_root(r);
    while (true) {
      auto [q, rem] = p.divmod(lin);
      if (!rem.is_zero_poly()) return k;
      p = q;
      ++k;
    }
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
class RatFunc;

// Over Q(a) the gcd goes through a primitive remainder sequence in Q[a][z].
Poly<RatFunc<Rational>> gcd(Poly<RatFunc<Rational>> a, Poly<RatFunc<Rational>> b);

// Monic gcd (zero if both are zero).
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero_poly()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Square-free decomposition (Yun): returns (factor, multiplicity) with monic factors.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& f) {
  std::vector<std::pair<Poly<K>, int>> out;
  if (f.degree() <= 0) return out;
  Poly<K> fp = f.derivative();
  Poly<K> a = gcd(f, fp);
  Poly<K> b = f / a;
  Poly<K> c = fp / a;
  Poly<K> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<K> g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g.monic(), i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace artifact
