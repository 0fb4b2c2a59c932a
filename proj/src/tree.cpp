#include "artifact/tree.hpp"

#include <algorithm>
#include <deque>

namespace artifact {

std::vector<std::string> CombTree::check(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges,
                                         const std::map<std::string, VertexId>& leaves) {
  std::vector<std::string> out;
  std::map<VertexId, std::set<VertexId>> adj;
  for (const auto& v : vertices) {
    if (adj.count(v)) out.push_back("duplicate vertex " + v);
    adj[v];
  }
  std::set<Edge> seen;
  for (const auto& [u, v] : edges) {
    if (!adj.count(u) || !adj.count(v)) {
      out.push_back("edge " + u + "-" + v + " has an unknown endpoint");
      continue;
    }
    if (u == v) out.push_back("loop at " + u);
    if (!seen.insert(make_edge(u, v)).second) out.push_back("duplicate edge " + u + "-" + v);
    adj[u].insert(v);
    adj[v].insert(u);
  }
  if (!vertices.empty()) {
    if (seen.size() + 1 != adj.size()) out.push_back("edge count is not vertex count - 1");
    std::set<VertexId> reach{vertices[0]};
    std::deque<VertexId> q{vertices[0]};
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (const auto& w : adj[v])
        if (reach.insert(w).second) q.push_back(w);
    }
    if (reach.size() != adj.size()) out.push_back("tree is not connected");
  }
  std::set<VertexId> leafset;
  for (const auto& [lab, v] : leaves) {
    if (!adj.count(v)) {
      out.push_back("leaf " + lab + " names unknown vertex " + v);
      continue;
    }
    if (!leafset.insert(v).second) out.push_back("vertex " + v + " carries two labels");
  }
  for (const auto& [v, ns] : adj) {
    bool is_leaf = leafset.count(v) > 0;
    if (is_leaf && ns.size() != 1 && adj.size() > 1) out.push_back("labelled vertex " + v + " is not a leaf");
    if (!is_leaf && ns.size() < 3) out.push_back("internal vertex " + v + " has valence " + std::to_string(ns.size()) + " < 3");
  }
  return out;
}

CombTree::CombTree(std::vector<VertexId> vertices, std::vector<Edge> edges, std::map<std::string, VertexId> leaves) {
  auto errs = check(vertices, edges, leaves);
  if (!errs.empty()) throw TreeError(errs.front());
  vertices_ = std::move(vertices);
  std::sort(vertices_.begin(), vertices_.end());
  for (const auto& v : vertices_) adj_[v];
  for (const auto& [u, v] : edges) {
    edges_.insert(make_edge(u, v));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  leaves_ = std::move(leaves);
  for (const auto& [lab, v] : leaves_) label_of_[v] = lab;
}

const std::set<VertexId>& CombTree::neighbors(const VertexId& v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw InvalidQuery("unknown vertex " + v);
  return it->second;
}

const std::string& CombTree::label_of(const VertexId& v) const {
  auto it = label_of_.find(v);
  if (it == label_of_.end()) throw InvalidQuery("vertex " + v + " is not a leaf");
  return it->second;
}

const VertexId& CombTree::leaf(const std::string& label) const {
  auto it = leaves_.find(label);
  if (it == leaves_.end()) throw InvalidQuery("unknown leaf label " + label);
  return it->second;
}

std::vector<VertexId> CombTree::internal_vertices() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (!is_leaf(v)) out.push_back(v);
  return out;
}

std::vector<VertexId> CombTree::path(const VertexId& u, const VertexId& v) const {
  neighbors(u);
  neighbors(v);
  std::map<VertexId, VertexId> parent;
  std::deque<VertexId> q{u};
  parent[u] = u;
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    if (x == v) break;
    for (const auto& w : adj_.at(x))
      if (!parent.count(w)) {
        parent[w] = x;
        q.push_back(w);
      }
  }
  std::vector<VertexId> out{v};
  while (out.back() != u) out.push_back(parent.at(out.back()));
  std::reverse(out.begin(), out.end());
  return out;
}

VertexId CombTree::toward(const VertexId& v, const VertexId& target) const {
  if (v == target) throw InvalidQuery("toward: identical vertices");
  return path(v, target)[1];
}

SubTree CombTree::subtree_from(const std::set<VertexId>& interior) const {
  SubTree s;
  s.interior = interior;
  for (const auto& v : interior)
    for (const auto& w : neighbors(v))
      if (!interior.count(w)) {
        s.boundary.insert(w);
        s.boundary_edges.insert(make_edge(v, w));
      }
  return s;
}

SubTree CombTree::branch(const VertexId& v, const VertexId& star) const {
  if (v == star) throw InvalidQuery("branch: star equals v");
  neighbors(v);
  VertexId start = toward(v, star);
  std::set<VertexId> comp{start};
  std::deque<VertexId> q{start};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    for (const auto& w : adj_.at(x))
      if (w != v && comp.insert(w).second) q.push_back(w);
  }
  return subtree_from(comp);
}

SubTree CombTree::annulus(const VertexId& v1, const VertexId& v2) const {
  if (!is_internal(v1) || !is_internal(v2)) throw InvalidQuery("annulus endpoints must be internal vertices");
  if (v1 == v2) throw InvalidQuery("annulus endpoints must differ");
  if (has_edge(v1, v2)) {
    SubTree s;
    s.boundary = {v1, v2};
    s.boundary_edges = {make_edge(v1, v2)};
    return s;
  }
  SubTree b1 = branch(v1, v2), b2 = branch(v2, v1);
  std::set<VertexId> inter;
  std::set_intersection(b1.interior.begin(), b1.interior.end(), b2.interior.begin(), b2.interior.end(),
                        std::inserter(inter, inter.end()));
  return subtree_from(inter);
}

SubTree CombTree::whole() const { return subtree_from(std::set<VertexId>(vertices_.begin(), vertices_.end())); }

int CombTree::euler_char(const SubTree& s) const {
  int chi = 0;
  for (const auto& v : s.interior) chi += 2 - valence(v);
  return chi;
}

std::vector<std::set<VertexId>> CombTree::components(const std::set<VertexId>& vs) const {
  std::vector<std::set<VertexId>> out;
  std::set<VertexId> seen;
  for (const auto& v : vs) {
    if (seen.count(v)) continue;
    std::set<VertexId> comp{v};
    std::deque<VertexId> q{v};
    seen.insert(v);
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      for (const auto& w : neighbors(x))
        if (vs.count(w) && seen.insert(w).second) {
          comp.insert(w);
          q.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::set<std::string> CombTree::labels_in(const std::set<VertexId>& vs) const {
  std::set<std::string> out;
  for (const auto& v : vs)
    if (is_leaf(v)) out.insert(label_of(v));
  return out;
}

bool CombTree::separates(const VertexId& v, const std::vector<VertexId>& others) const {
  std::set<VertexId> dirs;
  for (const auto& o : others) {
    if (o == v) return false;
    if (!dirs.insert(toward(v, o)).second) return false;
  }
  return true;
}

VertexId CombTree::median(const VertexId& a, const VertexId& b, const VertexId& c) const {
  auto pab = path(a, b);
  std::set<VertexId> sab(pab.begin(), pab.end());
  // first vertex of path(c, a) lying on path(a, b)
  for (const auto& x : path(c, a))
    if (sab.count(x)) return x;
  throw InvalidQuery("median: unreachable");
}

std::set<VertexId> CombTree::hull(const std::vector<VertexId>& vs) const {
  std::set<VertexId> out;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i; j < vs.size(); ++j) {
      auto p = path(vs[i], vs[j]);
      out.insert(p.begin(), p.end());
    }
  return out;
}

}  // namespace artifact
