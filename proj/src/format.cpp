#include "artifact/format.hpp"

namespace artifact {

namespace {
bool compound(const std::string& s) {
  return s.find_first_of("+- ", 1) != std::string::npos || s.find('(') != std::string::npos;
}

std::string monomial(const std::string& var, int i) {
  if (i == 0) return "";
  return i == 1 ? var : var + "^" + std::to_string(i);
}

template <class K, class F>
std::string poly_string(const Poly<K>& p, const std::string& var, F coeff_str) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const K& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    std::string cs = coeff_str(c);
    bool neg = !compound(cs) && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (compound(cs)) cs = "(" + cs + ")";
    std::string term;
    if (i == 0) term = cs;
    else if (cs == "1") term = monomial(var, i);
    else term = cs + "*" + monomial(var, i);
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

std::string ratio(const std::string& n, const std::string& d) {
  if (d == "1") return n;
  return (compound(n) ? "(" + n + ")" : n) + "/" + (compound(d) ? "(" + d + ")" : d);
}
}  // namespace

std::string to_string(const Poly<Rational>& p, const std::string& var) {
  return poly_string(p, var, [](const Rational& c) { return c.get_str(); });
}

std::string to_string(const ParamCoeff& c, const std::string& var) {
  return ratio(to_string(c.num(), var), to_string(c.den(), var));
}

std::string to_string(const Poly<Scalar>& p, const std::string& var) {
  return poly_string(p, var, [](const Scalar& c) { return to_string(c); });
}

std::string to_string(const RationalFunction& f, const std::string& var) {
  return ratio(to_string(f.num(), var), to_string(f.den(), var));
}

std::string to_string(const ParamRationalFunction& f, const std::string& var) {
  auto ps = [&](const Poly<ParamCoeff>& p) {
    return poly_string(p, var, [](const ParamCoeff& c) { return to_string(c, "a"); });
  };
  return ratio(ps(f.num()), ps(f.den()));
}

std::string to_string(const Point& p) { return p.inf ? "inf" : to_string(p.z); }

}  // namespace artifact
