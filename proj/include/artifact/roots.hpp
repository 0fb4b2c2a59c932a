#pragma once
// Exact root extraction: square-free decomposition, rational roots, and the
// quadratic formula.  Anything else is returned as an unresolved factor.

#include <type_traits>
#include <vector>

#include "artifact/ratfunc.hpp"

namespace artifact {

template <class K>
struct RootSet {
  std::vector<std::pair<ExtendedPoint<K>, int>> roots;  // point, multiplicity
  std::vector<std::pair<Poly<K>, int>> unresolved;      // monic factor, multiplicity
  bool complete() const { return unresolved.empty(); }
  int total() const {
    int t = 0;
    for (auto& r : roots) t += r.second;
    for (auto& u : unresolved) t += u.second * u.first.degree();
    return t;
  }
};

std::vector<Rational> rational_roots(const Poly<Rational>& p);
std::vector<Scalar> rational_roots(const Poly<Scalar>& p);

template <class K>
std::vector<K> rational_roots(const Poly<K>&) { return {}; }

// Roots of a square-free factor; unresolved remainder returned through rest.
template <class K>
std::vector<K> squarefree_roots(const Poly<K>& f, Poly<K>& rest) {
  std::vector<K> out;
  Poly<K> p = f.monic();
  if (p.degree() >= 3) {
    for (const K& r : rational_roots(p)) {
      out.push_back(r);
      p = p / Poly<K>::linear_root(r);
    }
  }
  if (p.degree() == 1) {
    out.push_back(-p.coeff(0));
    p = Poly<K>(1);
  } else if (p.degree() == 2) {
    K b = p.coeff(1), c = p.coeff(0);
    if (auto s = sqrt_exact(b * b - K(4) * c)) {
      out.push_back((-b + *s) / K(2));
      out.push_back((-b - *s) / K(2));
      p = Poly<K>(1);
    }
  }
  rest = p;
  return out;
}

template <class K>
RootSet<K> exact_roots(const Poly<K>& p) {
  RootSet<K> rs;
  for (auto& [fac, mult] : squarefree_decomposition(p)) {
    Poly<K> rest;
    for (const K& r : squarefree_roots(fac, rest)) rs.roots.push_back({ExtendedPoint<K>::finite(r), mult});
    if (rest.degree() > 0) rs.unresolved.push_back({rest, mult});
  }
  return rs;
}

// Fixed points with multiplicities (sum = deg f + 1 when complete).
template <class K>
RootSet<K> fixed_points(const RatFunc<K>& f) {
  if (f.degree() == 0) throw InvalidFunction("fixed points of a constant map");
  if (f.is_identity()) throw InvalidFunction("fixed points of the identity");
  Poly<K> g = f.num() - f.den() * Poly<K>::x();
  RootSet<K> rs = exact_roots(g);
  int at_inf = f.degree() + 1 - g.degree();
  if (at_inf > 0) rs.roots.push_back({ExtendedPoint<K>::infinity(), at_inf});
  return rs;
}

// Critical points with local multiplicity (deg - 1); sum = 2 deg f - 2.
template <class K>
RootSet<K> critical_points(const RatFunc<K>& f) {
  if (f.degree() < 1) throw InvalidFunction("critical points of a constant map");
  Poly<K> w = f.num().derivative() * f.den() - f.num() * f.den().derivative();
  RootSet<K> rs = exact_roots(w);
  int at_inf = 2 * f.degree() - 2 - w.degree();
  if (w.is_zero_poly()) at_inf = 0;
  if (at_inf > 0) rs.roots.push_back({ExtendedPoint<K>::infinity(), at_inf});
  return rs;
}

// Preimages of a value q under f with local degrees (sum = deg f).
template <class K>
RootSet<K> preimages(const RatFunc<K>& f, const ExtendedPoint<K>& q) {
  Poly<K> g = q.inf ? f.den() : f.num() - f.den().scaled(q.z);
  RootSet<K> rs = exact_roots(g);
  int at_inf = f.degree() - g.degree();
  if (at_inf > 0) rs.roots.push_back({ExtendedPoint<K>::infinity(), at_inf});
  return rs;
}

}  // namespace artifact
