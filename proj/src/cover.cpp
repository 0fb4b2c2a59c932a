#include "artifact/cover.hpp"

#include <algorithm>

namespace artifact {

namespace {
std::string pstr(const Point& p) { return p.inf ? "inf" : to_string(p.z); }
}  // namespace

const Point& TreeOfSpheres::att(const VertexId& v, const VertexId& nb) const {
  auto it = attach.find(v);
  if (it == attach.end()) throw InvalidQuery("no sphere at vertex " + v);
  auto jt = it->second.find(nb);
  if (jt == it->second.end()) throw InvalidQuery("no attachment at " + v + " toward " + nb);
  return jt->second;
}

Point TreeOfSpheres::a(const VertexId& v, const Label& label) const { return att(v, tree.toward(v, tree.leaf(label))); }

std::vector<Violation> TreeOfSpheres::validate() const {
  std::vector<Violation> out;
  if (combinatorial()) return out;
  for (const auto& v : tree.internal_vertices()) {
    auto it = attach.find(v);
    if (it == attach.end()) {
      out.push_back({"sphere", "internal vertex " + v + " has no sphere"});
      continue;
    }
    const auto& nbs = tree.neighbors(v);
    for (const auto& nb : nbs)
      if (!it->second.count(nb)) out.push_back({"sphere", "vertex " + v + " has no attachment for edge to " + nb});
    for (const auto& [nb, p] : it->second)
      if (!nbs.count(nb)) out.push_back({"sphere", "vertex " + v + " has an attachment for non-edge " + nb});
    for (auto i = it->second.begin(); i != it->second.end(); ++i)
      for (auto j = std::next(i); j != it->second.end(); ++j)
        if (i->second == j->second)
          out.push_back({"injectivity", "vertex " + v + ": edges to " + i->first + " and " + j->first + " share point " + pstr(i->second)});
  }
  for (const auto& [v, m] : attach)
    if (!tree.is_internal(v)) out.push_back({"sphere", "sphere data on non-internal vertex " + v});
  return out;
}

const VertexId& CoverBetweenTrees::image(const VertexId& v) const {
  auto it = F.find(v);
  if (it == F.end()) throw InvalidQuery("F undefined at " + v);
  return it->second;
}

int CoverBetweenTrees::vertex_degree(const VertexId& v) const {
  if (source.tree.is_leaf(v)) return portrait.degree_of(source.tree.label_of(v));
  auto it = maps.find(v);
  if (it != maps.end()) return it->second.degree();
  auto jt = skeleton_degree.find(v);
  return jt == skeleton_degree.end() ? 1 : jt->second;
}

int CoverBetweenTrees::edge_degree(const VertexId& u, const VertexId& v) const {
  for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
    if (source.tree.is_internal(x) && has_map(x)) return maps.at(x).local_degree(source.att(x, y));
  }
  for (const auto& x : {u, v})
    if (source.tree.is_leaf(x)) return portrait.degree_of(source.tree.label_of(x));
  auto it = skeleton_edge_degree.find(make_edge(u, v));
  return it == skeleton_edge_degree.end() ? 1 : it->second;
}

bool CoverBetweenTrees::is_skeleton() const {
  for (const auto& v : source.tree.internal_vertices())
    if (!has_map(v)) return true;
  return false;
}

std::vector<Label> CoverBetweenTrees::critical_leaves_in(const std::set<VertexId>& vs) const {
  std::vector<Label> out;
  for (const auto& v : vs)
    if (source.tree.is_leaf(v) && portrait.degree_of(source.tree.label_of(v)) > 1) out.push_back(source.tree.label_of(v));
  return out;
}

std::vector<Violation> validate_cover(const CoverBetweenTrees& C) {
  std::vector<Violation> out = validate_portrait(C.portrait);
  for (auto& v : C.source.validate()) out.push_back({"source." + v.kind, v.detail});
  for (auto& v : C.target.validate()) out.push_back({"target." + v.kind, v.detail});
  const CombTree& S = C.source.tree;
  const CombTree& T = C.target.tree;
  auto labels = [](const CombTree& t) {
    std::set<Label> s;
    for (const auto& [l, v] : t.leaves()) s.insert(l);
    return s;
  };
  if (labels(S) != C.portrait.Y) out.push_back({"marking", "source leaves are not labelled by Y"});
  if (labels(T) != C.portrait.Z) out.push_back({"marking", "target leaves are not labelled by Z"});
  if (!out.empty()) return out;

  // tree map
  for (const auto& v : S.vertices()) {
    auto it = C.F.find(v);
    if (it == C.F.end()) {
      out.push_back({"tree_map", "F undefined at " + v});
      continue;
    }
    const VertexId& w = it->second;
    if (!T.has_vertex(w)) {
      out.push_back({"tree_map", "F(" + v + ") = " + w + " is not a target vertex"});
      continue;
    }
    if (S.is_leaf(v)) {
      const Label& y = S.label_of(v);
      auto ft = C.portrait.F.find(y);
      if (!T.is_leaf(w) || ft == C.portrait.F.end() || T.label_of(w) != ft->second)
        out.push_back({"tree_map", "leaf " + y + " maps to " + w + " but the portrait says " +
                                       (ft == C.portrait.F.end() ? std::string("nothing") : ft->second)});
    } else if (!T.is_internal(w)) {
      out.push_back({"tree_map", "internal vertex " + v + " maps to non-internal " + w});
    }
  }
  if (!out.empty()) return out;
  for (const auto& [u, v] : S.edges())
    if (!T.has_edge(C.F.at(u), C.F.at(v)))
      out.push_back({"tree_map", "edge " + u + "-" + v + " maps to non-edge " + C.F.at(u) + "-" + C.F.at(v)});
  if (!out.empty()) return out;

  for (const auto& v : S.internal_vertices()) {
    const VertexId& w = C.F.at(v);
    const auto& nbs = S.neighbors(v);
    if (C.has_map(v)) {
      const RationalFunction& f = C.maps.at(v);
      if (f.degree() < 1) {
        out.push_back({"sphere_map", "f_" + v + " is constant"});
        continue;
      }
      // f_v o i_v = i_w o F
      for (const auto& nb : nbs) {
        Point lhs = f.eval(C.source.att(v, nb));
        Point rhs = C.target.att(w, C.F.at(nb));
        if (lhs != rhs)
          out.push_back({"compatibility", "f_v o i_v != i_w o F at edge " + v + "-" + nb + ": " + pstr(lhs) + " vs " + pstr(rhs)});
      }
      // f_v^{-1}(Z_w) = Y_v: the fibre over every target direction is exhausted by attachment points.
      std::map<VertexId, int> fib;
      int crit = 0;
      for (const auto& nb : nbs) {
        int ld = f.local_degree(C.source.att(v, nb));
        fib[C.F.at(nb)] += ld;
        crit += ld - 1;
      }
      for (const auto& wn : T.neighbors(w))
        if (fib[wn] != f.degree())
          out.push_back({"cover", "f_" + v + " fibre over edge " + w + "-" + wn + " meets attachment points with total degree " +
                                      std::to_string(fib[wn]) + " != " + std::to_string(f.degree())});
      if (crit != 2 * f.degree() - 2)
        out.push_back({"cover", "f_" + v + " has critical points off the attachment points (" + std::to_string(crit) +
                                    " of " + std::to_string(2 * f.degree() - 2) + " at attachments)"});
    }
    if (!C.has_map(v)) {
      // Skeleton vertex: edge degrees must fill every target direction and account for all critical points.
      const int dv = C.vertex_degree(v);
      std::map<VertexId, int> fib;
      int crit = 0;
      for (const auto& nb : nbs) {
        int ld = C.edge_degree(v, nb);
        if (ld < 1 || ld > dv)
          out.push_back({"edge_degree", "edge " + v + "-" + nb + " has degree " + std::to_string(ld) + " outside 1.." +
                                            std::to_string(dv)});
        fib[C.F.at(nb)] += ld;
        crit += ld - 1;
      }
      for (const auto& wn : T.neighbors(w))
        if (fib[wn] != dv)
          out.push_back({"cover", "skeleton vertex " + v + " covers edge " + w + "-" + wn + " with total degree " +
                                      std::to_string(fib[wn]) + " != " + std::to_string(dv)});
      if (crit != 2 * dv - 2)
        out.push_back({"cover", "skeleton vertex " + v + " has " + std::to_string(crit) + " critical points at edges, expected " +
                                    std::to_string(2 * dv - 2)});
    }
    // local degree agreement along edges
    for (const auto& nb : nbs) {
      if (!C.has_map(v)) continue;
      int here = C.maps.at(v).local_degree(C.source.att(v, nb));
      int there;
      if (S.is_leaf(nb)) there = C.portrait.degree_of(S.label_of(nb));
      else if (C.has_map(nb)) there = C.maps.at(nb).local_degree(C.source.att(nb, v));
      else continue;
      if (here != there)
        out.push_back({"edge_degree", "edge " + v + "-" + nb + ": local degree " + std::to_string(here) + " at " + v + " vs " +
                                          std::to_string(there) + " at " + nb});
    }
  }
  // global degree
  std::map<VertexId, int> fiber;
  for (const auto& v : S.internal_vertices()) fiber[C.F.at(v)] += C.vertex_degree(v);
  for (const auto& w : T.internal_vertices())
    if (fiber[w] != C.portrait.d)
      out.push_back({"global_degree", "vertices over " + w + " have total degree " + std::to_string(fiber[w]) + " != d = " +
                                          std::to_string(C.portrait.d)});
  return out;
}

int global_degree(const CoverBetweenTrees& C) {
  std::map<VertexId, int> fiber;
  for (const auto& v : C.source.tree.internal_vertices()) fiber[C.image(v)] += C.vertex_degree(v);
  int d = -1;
  for (const auto& w : C.target.tree.internal_vertices()) {
    if (d < 0) d = fiber[w];
    if (fiber[w] != d) throw InconsistentDegree("fibre degrees differ between target vertices");
  }
  return d;
}

std::vector<SubTree> preimage_components(const CoverBetweenTrees& C, const SubTree& tsub) {
  const CombTree& S = C.source.tree;
  std::vector<SubTree> out;
  if (tsub.interior.empty()) {
    for (const auto& [u, v] : S.edges())
      if (tsub.boundary_edges.count(make_edge(C.image(u), C.image(v)))) {
        SubTree s;
        s.boundary = {u, v};
        s.boundary_edges = {make_edge(u, v)};
        out.push_back(s);
      }
    return out;
  }
  std::set<VertexId> pre;
  for (const auto& v : S.vertices())
    if (tsub.interior.count(C.image(v))) pre.insert(v);
  for (auto& comp : S.components(pre)) out.push_back(S.subtree_from(comp));
  return out;
}

namespace {
std::set<Edge> edge_set(const CombTree& t, const SubTree& s) {
  std::set<Edge> es = s.boundary_edges;
  for (const auto& v : s.interior)
    for (const auto& w : t.neighbors(v))
      if (s.interior.count(w)) es.insert(make_edge(v, w));
  return es;
}
}  // namespace

RHReport rh_check(const CoverBetweenTrees& C, const SubTree& tsub, const SubTree& comp) {
  bool found = false;
  for (const auto& c : preimage_components(C, tsub)) found |= (c == comp);
  if (!found) throw InvalidQuery("rh_check: not a component of the preimage");
  const CombTree& S = C.source.tree;
  RHReport r;
  r.chi_source = S.euler_char(comp);
  r.chi_target = C.target.tree.euler_char(tsub);
  for (const auto& y : C.critical_leaves_in(comp.interior)) r.critical_multiplicity += C.portrait.degree_of(y) - 1;
  std::map<Edge, int> over;
  for (const auto& e : edge_set(S, comp)) over[make_edge(C.image(e.first), C.image(e.second))] += C.edge_degree(e.first, e.second);
  r.degree = -1;
  for (const auto& e : edge_set(C.target.tree, tsub)) {
    int k = over.count(e) ? over[e] : 0;
    if (r.degree < 0) r.degree = k;
    if (k != r.degree) r.degree_consistent = false;
  }
  if (r.degree < 0) r.degree = 0;
  return r;
}

RHSuiteReport rh_suite(const CoverBetweenTrees& C) {
  RHSuiteReport out;
  auto name = [](const std::string& what, const VertexId& a, const VertexId& b) { return what + "(" + a + ", " + b + ")"; };
  auto check_chi = [&](const CombTree& t, const std::string& tree) {
    auto in = t.internal_vertices();
    for (const auto& v : in)
      for (const auto& nb : t.neighbors(v))
        if (int chi = t.euler_char(t.branch(v, nb)); chi != 1)
          out.failures.push_back(tree + " " + name("branch", v, nb) + " has chi " + std::to_string(chi));
    for (size_t i = 0; i < in.size(); ++i)
      for (size_t j = i + 1; j < in.size(); ++j)
        if (int chi = t.euler_char(t.annulus(in[i], in[j])); chi != 0)
          out.failures.push_back(tree + " " + name("annulus", in[i], in[j]) + " closure has chi " + std::to_string(chi));
  };
  check_chi(C.source.tree, "source");
  check_chi(C.target.tree, "target");
  auto check = [&](const SubTree& t, const std::string& what) {
    for (const auto& comp : preimage_components(C, t)) {
      ++out.components;
      RHReport r = rh_check(C, t, comp);
      if (!r.holds())
        out.failures.push_back("preimage component of " + what + ": chi " + std::to_string(r.chi_source) + " != " +
                               std::to_string(r.degree) + " * " + std::to_string(r.chi_target) + " - " +
                               std::to_string(r.critical_multiplicity) +
                               (r.degree_consistent ? "" : " (inconsistent degree over the boundary)"));
    }
  };
  const CombTree& T = C.target.tree;
  auto in = T.internal_vertices();
  for (const auto& w : in)
    for (const auto& nb : T.neighbors(w)) {
      ++out.branches;
      check(T.branch(w, nb), name("branch", w, nb));
    }
  for (size_t i = 0; i < in.size(); ++i)
    for (size_t j = i + 1; j < in.size(); ++j) {
      ++out.annuli;
      check(T.annulus(in[i], in[j]), name("annulus", in[i], in[j]));
    }
  return out;
}

BranchImage map_branch(const CoverBetweenTrees& C, const VertexId& v, const VertexId& star) {
  const CombTree& S = C.source.tree;
  const CombTree& T = C.target.tree;
  BranchImage b;
  SubTree B = S.branch(v, star);
  auto crit = C.critical_leaves_in(B.interior);
  if (crit.size() >= 2) {
    b.applicable = false;
    b.note = "branch contains two or more critical leaves";
    return b;
  }
  VertexId u = S.toward(v, star);
  b.image_vertex = C.image(v);
  b.image = T.branch(b.image_vertex, C.image(u));
  if (C.has_map(v)) b.attaching_point = C.maps.at(v).eval(C.source.att(v, u));
  else if (!C.target.combinatorial()) b.attaching_point = C.target.att(b.image_vertex, C.image(u));
  b.degree = C.edge_degree(v, u);
  std::set<VertexId> img;
  bool injective = true;
  for (const auto& x : B.interior)
    if (!img.insert(C.image(x)).second) injective = false;
  b.onto = (img == b.image.interior);
  b.bijective = b.onto && injective;
  return b;
}

AnnulusImage map_annulus(const CoverBetweenTrees& C, const VertexId& v1, const VertexId& v2) {
  const CombTree& S = C.source.tree;
  AnnulusImage a;
  SubTree A = S.annulus(v1, v2);
  if (!C.critical_leaves_in(A.interior).empty()) {
    a.applicable = false;
    a.note = "annulus contains a critical leaf";
    return a;
  }
  VertexId w1 = C.image(v1), w2 = C.image(v2);
  if (w1 == w2) {
    a.applicable = false;
    a.note = "endpoints have the same image";
    return a;
  }
  a.image = C.target.tree.annulus(w1, w2);
  auto spine = S.path(v1, v2);
  a.degree = C.edge_degree(spine[0], spine[1]);
  a.spine_degree_one = true;
  for (size_t i = 0; i + 1 < spine.size(); ++i)
    if (C.edge_degree(spine[i], spine[i + 1]) != 1) a.spine_degree_one = false;
  for (size_t i = 1; i + 1 < spine.size(); ++i)
    if (C.vertex_degree(spine[i]) != 1) a.spine_degree_one = false;
  std::set<VertexId> img;
  bool injective = true;
  for (const auto& x : A.interior)
    if (!img.insert(C.image(x)).second) injective = false;
  auto tsp = C.target.tree.path(w1, w2);
  std::vector<VertexId> mapped;
  for (const auto& x : spine) mapped.push_back(C.image(x));
  a.bijective_on_closure = injective && img == a.image.interior && mapped == tsp;
  return a;
}

}  // namespace artifact
