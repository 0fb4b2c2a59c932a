#include "artifact/admissibility.hpp"

#include <algorithm>

namespace artifact {

namespace {
std::string pstr(const Point& p) { return p.inf ? "inf" : to_string(p.z); }

std::optional<VertexId> neighbor_at(const TreeOfSpheres& T, const VertexId& v, const Point& p) {
  auto it = T.attach.find(v);
  if (it == T.attach.end()) return std::nullopt;
  for (const auto& [nb, q] : it->second)
    if (q == p) return nb;
  return std::nullopt;
}

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i];
  return s;
}

// Internal T^X vertices on the T^X path between two internal vertices.
std::set<VertexId> xpath(const DynamicalTreeSystem& S, const VertexId& a, const VertexId& b) {
  auto p = S.treeX.tree.path(a, b);
  return std::set<VertexId>(p.begin(), p.end());
}

bool subset(const std::set<VertexId>& a, const std::set<VertexId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Image of p under f_{v_{k-1}} o ... o f_{v_0} and the chart derivative of that composite at p.
struct Transport {
  Point image;
  Scalar derivative;
};
Transport transport(const DynamicalTreeSystem& S, const std::vector<VertexId>& orbit, int k, Point p) {
  Scalar d(1);
  for (int i = 0; i < k; ++i) {
    const auto& f = S.sphere_map(orbit[i]);
    d = d * f.chart_derivative(p);
    p = f.eval(p);
  }
  return {p, d};
}
}  // namespace

bool operator<(const AdmissibilityWitness& a, const AdmissibilityWitness& b) {
  return std::tie(a.lemma, a.vertices, a.k0, a.detail) < std::tie(b.lemma, b.vertices, b.k0, b.detail);
}

std::string status_name(AdmissibilityStatus s) {
  return s == AdmissibilityStatus::NotApproximable ? "NotApproximable" : "ConsistentWithNecessaryConditions";
}

int default_kmax(const DynamicalTreeSystem& S) { return (int)S.treeX.tree.internal_vertices().size(); }

std::vector<AdmissibilityWitness> check_branches_lemma(const DynamicalTreeSystem& S) {
  std::vector<AdmissibilityWitness> out;
  const CombTree& TY = S.cover.source.tree;
  const CombTree& TZ = S.cover.target.tree;
  std::map<VertexId, SphereCycle> cycle_of;
  for (const auto& c : sphere_cycles(S))
    for (const auto& v : c.vertices) cycle_of[v] = c;

  for (const auto& [x, cyc0] : cycle_of) {
    SphereCycle cyc = rebase(cyc0, x);
    const int p = cyc.period;
    std::vector<Point> cands;
    auto add = [&](const TreeOfSpheres& T, const VertexId& v) {
      for (const auto& [nb, q] : T.attach.at(v))
        if (std::find(cands.begin(), cands.end(), q) == cands.end()) cands.push_back(q);
    };
    add(S.cover.source, S.in_Y(x));
    add(S.cover.target, S.in_Z(x));

    for (const auto& a0 : cands) {
      auto nb0 = neighbor_at(S.cover.source, S.in_Y(x), a0);
      if (!nb0) continue;
      std::vector<std::pair<int, Point>> states;
      int j = 0;
      Point pt = a0;
      bool holds = true, a0_periodic = false;
      while (true) {
        auto seen = std::find(states.begin(), states.end(), std::make_pair(j, pt));
        if (seen != states.end()) {
          a0_periodic = seen == states.begin();
          break;
        }
        states.push_back({j, pt});
        const VertexId& vj = cyc.vertices[j];
        const VertexId& vn = cyc.vertices[(j + 1) % p];
        auto ny = neighbor_at(S.cover.source, S.in_Y(vj), pt);
        Point q = S.sphere_map(vj).eval(pt);
        auto nz = neighbor_at(S.cover.target, S.in_Z(vn), q);
        // The hypothesis needs a branch at every iterate, so the orbit stays among attaching points.
        if (!ny || !nz) {
          holds = false;
          break;
        }
        SubTree by = TY.branch(S.in_Y(vj), *ny);
        SubTree bz = TZ.branch(S.in_Z(vn), *nz);
        for (const auto& u : by.interior)
          if (!bz.contains(S.cover.image(u))) holds = false;
        if (!holds) break;
        j = (j + 1) % p;
        pt = q;
      }
      if (!holds) continue;
      SubTree B = TY.branch(S.in_Y(x), *nb0);
      for (const auto& [u, ucyc] : cycle_of) {
        if (!B.contains(S.in_Y(u))) continue;
        AdmissibilityWitness w;
        w.lemma = "branches";
        w.vertices = {x, u};
        w.k0 = p;
        w.values = {"a0=" + pstr(a0), "cycle_degree=" + std::to_string(ucyc.cycle_degree),
                    "a0_periodic=" + std::string(a0_periodic ? "true" : "false")};
        if (S.degree(u) >= 2) {
          w.detail = "invariant branch at " + pstr(a0) + " on " + x + " contains the critical periodic vertex " + u;
          out.push_back(w);
        } else if (ucyc.cycle_degree > 1 || !a0_periodic) {
          w.detail = "invariant branch at " + pstr(a0) + " on " + x + " contains the periodic vertex " + u +
                     (ucyc.cycle_degree > 1 ? " of a critical cycle" : " while a0 is not periodic");
          out.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AnnuliCheck check_annuli_lemma(const DynamicalTreeSystem& S, int kmax) {
  AnnuliCheck out;
  const CombTree& TY = S.cover.source.tree;
  auto V = S.treeX.tree.internal_vertices();
  std::sort(V.begin(), V.end());
  for (size_t i = 0; i < V.size(); ++i) {
    for (size_t jj = i + 1; jj < V.size(); ++jj) {
      const VertexId &v = V[i], &vp = V[jj];
      std::vector<VertexId> vs{v}, ws{vp};
      std::vector<int> degs;
      const auto base = xpath(S, v, vp);
      for (int k0 = 1; k0 <= kmax; ++k0) {
        const VertexId &a = vs.back(), &b = ws.back();
        if (a == b) break;
        VertexId ya = S.in_Y(a), yb = S.in_Y(b);
        if (!S.cover.critical_leaves_in(TY.annulus(ya, yb).interior).empty()) break;
        auto img = map_annulus(S.cover, ya, yb);
        if (!img.applicable) break;
        degs.push_back(img.degree);
        auto na = S.step(a), nb = S.step(b);
        if (!na || !nb) {
          out.untested.push_back({{v, vp}, k0, "iterate of " + (!na ? a : b) + " leaves T^X"});
          break;
        }
        vs.push_back(*na);
        ws.push_back(*nb);
        if (*na == *nb) break;
        const auto now = xpath(S, *na, *nb);
        bool inside = subset(now, base);
        bool critical = std::any_of(degs.begin(), degs.end(), [](int d) { return d > 1; });
        std::vector<std::string> dv;
        for (int d : degs) dv.push_back(std::to_string(d));
        std::string degstr = "degrees=" + join(dv);
        if (critical) {
          if (!inside) continue;
          out.witnesses.push_back({"annuli-critical",
                                   {v, vp},
                                   k0,
                                   "critical annulus ]]" + v + "," + vp + "[[ returns inside its own spine after " +
                                       std::to_string(k0) + " iterates (to ]]" + *na + "," + *nb + "[[)",
                                   {degstr}});
          break;
        }
        if (!inside && !subset(base, now)) continue;
        const CombTree& TX = S.treeX.tree;
        Point pv = S.treeX.att(v, TX.toward(v, vp));
        Point pw = S.treeX.att(vp, TX.toward(vp, v));
        const Transport tv = transport(S, vs, k0, pv), tw = transport(S, ws, k0, pw);
        if (*na == v && *nb == vp) {
          if (tv.image != pv || tw.image != pw) {
            out.witnesses.push_back({"annuli-noncritical", {v, vp}, k0,
                                     "attaching points are not fixed by the return maps",
                                     {degstr, "images=" + pstr(tv.image) + "," + pstr(tw.image)}});
            break;
          }
          Scalar prod = tv.derivative * tw.derivative;
          if (prod != Scalar(1))
            out.witnesses.push_back({"annuli-noncritical",
                                     {v, vp},
                                     k0,
                                     "product of the multipliers at the attaching points is not 1",
                                     {degstr, "multipliers=" + to_string(tv.derivative) + "," + to_string(tw.derivative),
                                      "product=" + to_string(prod)}});
          else
            continue;
        } else if (*na == vp && *nb == v) {
          // The exchanged cycle pv -> pw -> pv has multiplier equal to the product of both legs.
          if (tv.image != pw || tw.image != pv) {
            out.witnesses.push_back({"annuli-noncritical", {v, vp}, k0,
                                     "swapped endpoints but the attaching points are not exchanged", {degstr}});
            break;
          }
          Scalar m = tv.derivative * tw.derivative;
          if (m != Scalar(1))
            out.witnesses.push_back({"annuli-noncritical", {v, vp}, k0,
                                     "exchanged attaching points with cycle multiplier != 1",
                                     {degstr, "multiplier=" + to_string(m)}});
          else
            continue;
        } else {
          out.witnesses.push_back({"annuli-noncritical",
                                   {v, vp},
                                   k0,
                                   "degree-1 annulus returns nested in its spine with different endpoints (]]" + *na +
                                       "," + *nb + "[[)",
                                   {degstr}});
        }
        // Only the first violating k0 of each pair is reported.
        break;
      }
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

AdmissibilityVerdict admissibility_report(const DynamicalTreeSystem& S, std::optional<int> kmax) {
  AdmissibilityVerdict v;
  int k = kmax.value_or(default_kmax(S));
  v.witnesses = check_branches_lemma(S);
  auto ann = check_annuli_lemma(S, k);
  v.witnesses.insert(v.witnesses.end(), ann.witnesses.begin(), ann.witnesses.end());
  std::sort(v.witnesses.begin(), v.witnesses.end());
  v.untested = std::move(ann.untested);
  v.notes.push_back("branches lemma: a0 restricted to attaching points of the periodic spheres");
  v.notes.push_back("kmax = " + std::to_string(k));
  v.status = v.witnesses.empty() ? AdmissibilityStatus::ConsistentWithNecessaryConditions
                                 : AdmissibilityStatus::NotApproximable;
  return v;
}

}  // namespace artifact
