#include "artifact/bicritical.hpp"

#include "artifact/moebius.hpp"
#include "artifact/roots.hpp"

namespace artifact {

std::string case_name(CaseKind k) {
  switch (k) {
    case CaseKind::ParabolicOnly: return "ParabolicOnly";
    case CaseKind::ParabolicAndPolynomial: return "ParabolicAndPolynomial";
    case CaseKind::ForgottenPolynomial: return "ForgottenPolynomial";
    case CaseKind::NoRescalingCertificate: return "NoRescalingCertificate";
    case CaseKind::TheoremContradiction: return "TheoremContradiction";
  }
  return "?";
}

namespace {
std::pair<Label, Label> critical_pair(const CoverBetweenTrees& C) {
  const Portrait& P = C.portrait;
  auto crit = P.critical();
  if (crit.size() != 2 || P.degree_of(crit[0]) != P.d || P.degree_of(crit[1]) != P.d)
    throw StructuralViolation("portrait is not bicritical");
  return {crit[0], crit[1]};
}
}  // namespace

std::vector<VertexId> critical_path(const CoverBetweenTrees& C) {
  auto [c, cp] = critical_pair(C);
  const CombTree& TY = C.source.tree;
  auto p = TY.path(TY.leaf(c), TY.leaf(cp));
  std::set<VertexId> on(p.begin(), p.end());
  for (const auto& v : TY.internal_vertices()) {
    bool crit = C.vertex_degree(v) >= 2;
    if (crit && !on.count(v)) throw StructuralViolation("critical vertex " + v + " lies off the critical path");
    if (!crit && on.count(v)) throw StructuralViolation("vertex " + v + " on the critical path is not critical");
  }
  return p;
}

std::vector<VertexId> critical_path(const DynamicalTreeSystem& S) { return critical_path(S.cover); }

std::variant<W0V0, NoRescalingCertificate> locate_w0_v0(const DynamicalTreeSystem& S, int order_bound) {
  const Portrait& P = S.cover.portrait;
  auto [c, cp] = critical_pair(S.cover);
  auto fixed = P.fixed_in_X();
  if ((int)fixed.size() < P.d + 1)
    return NoRescalingCertificate{"X contains " + std::to_string(fixed.size()) + " fixed leaves, fewer than d+1"};
  const CombTree& TX = S.treeX.tree;
  const CombTree& TY = S.cover.source.tree;
  std::optional<VertexId> w0;
  std::string separating;
  for (const auto& x : TX.internal_vertices()) {
    std::set<VertexId> dirs;
    for (const auto& l : fixed) dirs.insert(TX.toward(x, TX.leaf(l)));
    if (dirs.size() < 3) continue;
    auto img = S.step(x);
    separating += std::string(separating.empty() ? "" : ", ") + x + (img && *img == x ? " fixed" : " not fixed");
    const VertexId& y = S.in_Y(x);
    if (TY.toward(y, TY.leaf(c)) != TY.toward(y, TY.leaf(cp))) continue;
    w0 = x;
    break;
  }
  if (!w0)
    return NoRescalingCertificate{"no vertex separates three fixed leaves with both critical leaves on one side" +
                                  (separating.empty() ? std::string() : " (separating: " + separating + ")")};
  auto img = S.step(*w0);
  if (!img || *img != *w0) return NoRescalingCertificate{"w0 = " + *w0 + " is not fixed"};
  if (!S.cover.has_map(S.in_Y(*w0))) return NoRescalingCertificate{"no sphere map at w0 = " + *w0 + " (skeleton)"};
  const auto& f = S.sphere_map(*w0);
  auto m = as_moebius(f);
  if (!m) return NoRescalingCertificate{"f_w0 is not a Moebius map"};
  auto k0 = m->order(order_bound);
  if (!k0) return NoRescalingCertificate{"order of f_w0 undetermined > " + std::to_string(order_bound)};
  if (*k0 < 2) return NoRescalingCertificate{"f_w0 is the identity"};
  VertexId y0 = S.in_Y(*w0);
  VertexId v0 = TY.median(y0, TY.leaf(c), TY.leaf(cp));
  return W0V0{*w0, *k0, v0};
}

std::optional<Scalar> quadratic_polynomial_invariant(const RationalFunction& g, const Point& p) {
  if (g.degree() != 2 || g.eval(p) != p || g.local_degree(p) != 2) return std::nullopt;
  // z -> 1/(z - p) moves p to infinity; the conjugate is a quadratic polynomial
  MoebiusMap m = p.inf ? MoebiusMap::identity() : MoebiusMap(Scalar(0), Scalar(1), Scalar(1), -p.z);
  RationalFunction h = m.conjugate(g);
  if (h.den().degree() != 0 || h.num().degree() != 2) return std::nullopt;
  Scalar a2 = h.num().coeff(2), a1 = h.num().coeff(1), a0 = h.num().coeff(0);
  return a0 * a2 + a1 / Scalar(2) - a1 * a1 / Scalar(4);
}

namespace {
std::optional<Point> find_critical_fixed_point(const RationalFunction& g, int d) {
  auto cps = critical_points(g);
  for (const auto& [p, m] : cps.roots)
    if (m == d - 1 && g.eval(p) == p) return p;
  return std::nullopt;
}

// "yes" when some critical point lands on target within cap iterations.
std::string lands_on(const RationalFunction& g, const Point& target, int cap) {
  auto cps = critical_points(g);
  if (!cps.complete()) return "unverified";
  bool all_closed = true;
  for (const auto& [p, m] : cps.roots) {
    Point x = p;
    std::vector<Point> seen{x};
    bool closed = false;
    for (int k = 0; k <= cap; ++k) {
      if (x == target) return "yes";
      if (orbit_too_tall(x)) break;
      x = g.eval(x);
      for (const auto& s : seen)
        if (s == x) closed = true;
      if (closed) break;
      seen.push_back(x);
    }
    if (!closed && x != target) all_closed = false;
  }
  return all_closed ? "no" : "unverified";
}
}  // namespace

BicriticalClassification classify(const DynamicalTreeSystem& S, int cap, int order_bound) {
  BicriticalClassification out;
  const int d = S.cover.portrait.d;
  out.critical_path = critical_path(S);
  auto loc = locate_w0_v0(S, order_bound);
  if (auto* nc = std::get_if<NoRescalingCertificate>(&loc)) {
    out.kind = CaseKind::NoRescalingCertificate;
    out.notes.push_back(nc->reason);
    return out;
  }
  const auto& wv = std::get<W0V0>(loc);
  out.w0 = wv.w0;
  out.v0 = wv.v0;
  out.k0 = wv.k0;

  auto crit = critical_cycles(S);
  for (const auto& c : crit) {
    CycleDiagnostics cd;
    cd.cycle = c;
    cd.cover = cycle_cover(S, c);
    cd.critical_fixed_point = find_critical_fixed_point(cd.cover, d);
    cd.pcf = post_critically_finite(cd.cover, cap);
    out.cycles.push_back(cd);
  }
  if (crit.size() > 2) {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("more than two critical cycles");
    return out;
  }
  for (const auto& c : crit)
    if (c.cycle_degree != d) {
      out.kind = CaseKind::TheoremContradiction;
      out.notes.push_back("critical cycle of degree " + std::to_string(c.cycle_degree) + " != d");
      return out;
    }

  auto x0 = S.from_Y(wv.v0);
  OrbitRecord orb;
  if (x0) orb = vertex_orbit(S, *x0, (int)S.treeX.tree.internal_vertices().size() + 1);
  else orb.forgotten_at = 0;

  auto index_of_cycle = [&](const VertexId& x) -> int {
    for (size_t i = 0; i < out.cycles.size(); ++i)
      for (const auto& v : out.cycles[i].cycle.vertices)
        if (v == x) return (int)i;
    return -1;
  };

  if (orb.forgotten_at && *orb.forgotten_at < wv.k0) {
    if (out.cycles.size() != 1) {
      out.kind = CaseKind::TheoremContradiction;
      out.notes.push_back("v0 forgotten but " + std::to_string(out.cycles.size()) + " critical cycles");
      return out;
    }
    auto& cd = out.cycles[0];
    out.k0_prime = cd.cycle.period;
    if (cd.cycle.period <= wv.k0 || !cd.critical_fixed_point) {
      out.kind = CaseKind::TheoremContradiction;
      out.notes.push_back("polynomial cycle check failed");
      return out;
    }
    out.kind = CaseKind::ForgottenPolynomial;
    return out;
  }

  int ci = x0 ? index_of_cycle(*x0) : -1;
  if (ci < 0 || !orb.period || *orb.preperiod != 0) {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("v0 is neither periodic nor forgotten before k0");
    return out;
  }
  auto& first = out.cycles[ci];
  if (first.cycle.period != wv.k0) {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("v0 has period " + std::to_string(first.cycle.period) + " != k0 = " + std::to_string(wv.k0));
    return out;
  }
  first.cycle = rebase(first.cycle, *x0);
  first.cover = cycle_cover(S, first.cycle);
  // attaching point on v0 toward w0
  const CombTree& TY = S.cover.source.tree;
  Point par = S.cover.source.att(wv.v0, TY.toward(wv.v0, S.in_Y(wv.w0)));
  if (first.cover.eval(par) != par || first.cover.multiplier(par) != Scalar(1)) {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("cycle cover at v0 has no parabolic fixed point toward w0");
    return out;
  }
  first.parabolic_point = par;
  if (out.cycles.size() == 1) {
    out.kind = CaseKind::ParabolicOnly;
    return out;
  }
  auto& second = out.cycles[1 - ci];
  out.k0_prime = second.cycle.period;
  first.critical_orbit_to_parabolic = lands_on(first.cover, par, cap);
  if (second.cycle.period <= wv.k0) {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("second cycle period k0' <= k0");
    return out;
  }
  if (!second.critical_fixed_point) {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("second cycle cover has no fixed critical point of local degree d");
    return out;
  }
  if (first.critical_orbit_to_parabolic == "no") {
    out.kind = CaseKind::TheoremContradiction;
    out.notes.push_back("no critical point of the parabolic cycle cover lands on the parabolic point");
    return out;
  }
  if (first.critical_orbit_to_parabolic == "unverified") out.notes.push_back("critical orbit to the parabolic point unverified within cap");
  out.kind = CaseKind::ParabolicAndPolynomial;
  return out;
}

}  // namespace artifact
