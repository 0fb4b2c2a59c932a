#include "artifact/roots.hpp"

#include <set>

namespace artifact {

namespace {
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > 1000000) return out;
  long v = n.get_si();
  for (long k = 1; k * k <= v; ++k)
    if (v % k == 0) {
      out.push_back(k);
      if (k * k != v) out.push_back(v / k);
    }
  return out;
}
}  // namespace

std::vector<Rational> rational_roots(const Poly<Rational>& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  Poly<Rational> q = p;
  // strip roots at 0
  while (q.degree() >= 1 && is_zero(q.coeff(0))) {
    out.push_back(0);
    q = q / Poly<Rational>::x();
  }
  if (q.degree() < 1) return out;
  mpz_class L = 1;
  for (const auto& c : q.coeffs()) L = lcm(L, c.get_den());
  mpz_class a0 = Rational(q.coeff(0) * L).get_num(), an = Rational(q.lead() * L).get_num();
  std::set<Rational, bool (*)(const Rational&, const Rational&)> seen(
      [](const Rational& x, const Rational& y) { return x < y; });
  for (const auto& u : divisors(a0))
    for (const auto& v : divisors(an))
      for (int s : {1, -1}) {
        Rational r(s * u, v);
        r.canonicalize();
        if (seen.count(r)) continue;
        seen.insert(r);
        while (q.degree() >= 1 && is_zero(q(r))) {
          out.push_back(r);
          q = q / Poly<Rational>::linear_root(r);
        }
      }
  return out;
}

std::vector<Scalar> rational_roots(const Poly<Scalar>& p) {
  for (const auto& c : p.coeffs())
    if (!is_rational(c)) return {};
  std::vector<Rational> cs;
  for (const auto& c : p.coeffs()) cs.push_back(c.a.a);
  std::vector<Scalar> out;
  for (const auto& r : rational_roots(Poly<Rational>(cs))) out.push_back(Scalar(GaussianRational(r)));
  return out;
}

}  // namespace artifact
