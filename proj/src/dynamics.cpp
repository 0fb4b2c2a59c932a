#include "artifact/dynamics.hpp"

#include <algorithm>

#include "artifact/roots.hpp"

namespace artifact {

const VertexId& DynamicalTreeSystem::in_Y(const VertexId& x) const {
  auto it = shared.find(x);
  if (it == shared.end()) throw InvalidQuery(x + " is not an internal T^X vertex");
  return it->second.first;
}
const VertexId& DynamicalTreeSystem::in_Z(const VertexId& x) const {
  auto it = shared.find(x);
  if (it == shared.end()) throw InvalidQuery(x + " is not an internal T^X vertex");
  return it->second.second;
}
std::optional<VertexId> DynamicalTreeSystem::from_Z(const VertexId& z) const {
  for (const auto& [x, yz] : shared)
    if (yz.second == z) return x;
  return std::nullopt;
}
std::optional<VertexId> DynamicalTreeSystem::from_Y(const VertexId& y) const {
  for (const auto& [x, yz] : shared)
    if (yz.first == y) return x;
  return std::nullopt;
}
std::optional<VertexId> DynamicalTreeSystem::step(const VertexId& x) const { return from_Z(cover.image(in_Y(x))); }
const RationalFunction& DynamicalTreeSystem::sphere_map(const VertexId& x) const {
  auto it = cover.maps.find(in_Y(x));
  if (it == cover.maps.end()) throw InvalidQuery("no sphere map at " + x);
  return it->second;
}

namespace {
std::string pstr(const Point& p) { return p.inf ? "inf" : to_string(p.z); }

// Internal vertices of t separating three leaves whose labels lie in X.
std::set<VertexId> separating_vertices(const CombTree& t, const std::set<Label>& X) {
  std::set<VertexId> out;
  for (const auto& v : t.internal_vertices()) {
    int dirs = 0;
    for (const auto& nb : t.neighbors(v)) {
      auto labs = t.labels_in(t.branch(v, nb).interior);
      bool any = std::any_of(labs.begin(), labs.end(), [&](const Label& l) { return X.count(l) > 0; });
      if (any) ++dirs;
    }
    if (dirs >= 3) out.insert(v);
  }
  return out;
}
}  // namespace

std::vector<Violation> validate_system(const DynamicalTreeSystem& S) {
  std::vector<Violation> out = validate_cover(S.cover);
  for (auto& v : S.treeX.validate()) out.push_back({"treeX." + v.kind, v.detail});
  const Portrait& P = S.cover.portrait;
  std::set<Label> xl;
  for (const auto& [l, v] : S.treeX.tree.leaves()) xl.insert(l);
  if (xl != P.X) out.push_back({"marking", "T^X leaves are not labelled by X"});
  if (!out.empty()) return out;
  const CombTree& TY = S.cover.source.tree;
  const CombTree& TZ = S.cover.target.tree;
  for (const auto& x : S.treeX.tree.internal_vertices()) {
    auto it = S.shared.find(x);
    if (it == S.shared.end()) {
      out.push_back({"shared", "T^X vertex " + x + " has no T^Y/T^Z counterpart"});
      continue;
    }
    const auto& [y, z] = it->second;
    if (!TY.is_internal(y) || !TZ.is_internal(z)) {
      out.push_back({"shared", "counterparts of " + x + " are not internal vertices"});
      continue;
    }
    // a_v^X = a_v^Y|_X = a_v^Z|_X
    if (S.treeX.combinatorial() || S.cover.source.combinatorial() || S.cover.target.combinatorial()) continue;
    for (const auto& l : P.X) {
      Point px = S.treeX.a(x, l), py = S.cover.source.a(y, l), pz = S.cover.target.a(z, l);
      if (px != py || px != pz)
        out.push_back({"compatibility", "vertex " + x + ", label " + l + ": X " + pstr(px) + ", Y " + pstr(py) + ", Z " + pstr(pz)});
    }
  }
  for (const auto& [x, yz] : S.shared)
    if (!S.treeX.tree.is_internal(x)) out.push_back({"shared", x + " is not an internal T^X vertex"});
  // Every vertex separating three X-leaves belongs to T^X.
  std::set<VertexId> ys, zs;
  for (const auto& [x, yz] : S.shared) {
    ys.insert(yz.first);
    zs.insert(yz.second);
  }
  for (const auto& v : separating_vertices(TY, P.X))
    if (!ys.count(v)) out.push_back({"separation", "T^Y vertex " + v + " separates three X-leaves but is not in T^X"});
  for (const auto& v : separating_vertices(TZ, P.X))
    if (!zs.count(v)) out.push_back({"separation", "T^Z vertex " + v + " separates three X-leaves but is not in T^X"});
  return out;
}

OrbitRecord vertex_orbit(const DynamicalTreeSystem& S, const VertexId& v, int kmax) {
  OrbitRecord r;
  r.orbit.push_back(v);
  std::map<VertexId, int> seen{{v, 0}};
  VertexId cur = v;
  for (int k = 1; k <= kmax; ++k) {
    auto nxt = S.step(cur);
    if (!nxt) {
      r.forgotten_at = k;
      return r;
    }
    auto it = seen.find(*nxt);
    if (it != seen.end()) {
      r.preperiod = it->second;
      r.period = k - it->second;
      return r;
    }
    seen[*nxt] = k;
    r.orbit.push_back(*nxt);
    cur = *nxt;
  }
  return r;
}

std::vector<SphereCycle> sphere_cycles(const DynamicalTreeSystem& S) {
  std::vector<SphereCycle> out;
  std::set<VertexId> done;
  auto xs = S.treeX.tree.internal_vertices();
  for (const auto& v : xs) {
    if (done.count(v)) continue;
    auto rec = vertex_orbit(S, v, (int)xs.size() + 1);
    for (const auto& w : rec.orbit) done.insert(w);
    if (!rec.period) continue;
    SphereCycle c;
    c.period = *rec.period;
    for (int i = *rec.preperiod; i < (int)rec.orbit.size(); ++i) c.vertices.push_back(rec.orbit[i]);
    // canonical base: smallest identifier
    auto m = std::min_element(c.vertices.begin(), c.vertices.end());
    std::rotate(c.vertices.begin(), m, c.vertices.end());
    bool dup = false;
    for (const auto& o : out) dup |= (o.vertices == c.vertices);
    if (dup) continue;
    for (const auto& w : c.vertices) c.cycle_degree *= S.degree(w);
    out.push_back(c);
  }
  return out;
}

std::vector<SphereCycle> critical_cycles(const DynamicalTreeSystem& S) {
  std::vector<SphereCycle> out;
  for (auto& c : sphere_cycles(S))
    if (c.critical()) out.push_back(c);
  return out;
}

SphereCycle rebase(const SphereCycle& c, const VertexId& v) {
  SphereCycle r = c;
  auto it = std::find(r.vertices.begin(), r.vertices.end(), v);
  if (it == r.vertices.end()) throw InvalidQuery(v + " is not on the cycle");
  std::rotate(r.vertices.begin(), it, r.vertices.end());
  return r;
}

RationalFunction cycle_cover(const DynamicalTreeSystem& S, const SphereCycle& c) {
  RationalFunction g = RationalFunction::identity();
  for (const auto& v : c.vertices) g = S.sphere_map(v).compose(g);
  return g;
}

Tristate post_critically_finite(const RationalFunction& g, int cap) {
  auto cps = critical_points(g);
  if (!cps.complete()) return Tristate::Unknown;
  for (const auto& [p, m] : cps.roots) {
    std::vector<Point> orbit{p};
    bool finite = false;
    for (int k = 0; k < cap && !finite; ++k) {
      if (orbit_too_tall(orbit.back())) break;
      Point q = g.eval(orbit.back());
      for (const auto& o : orbit) finite |= (o == q);
      orbit.push_back(q);
    }
    if (!finite) return Tristate::Unknown;
  }
  return Tristate::True;
}

}  // namespace artifact
