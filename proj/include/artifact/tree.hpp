#pragma once
// Finite combinatorial trees with labelled leaves, and the subgraph calculus
// (branches, paths, annuli, Euler characteristic).

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artifact {

using VertexId = std::string;
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

inline Edge make_edge(const VertexId& u, const VertexId& v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct InvalidQuery : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A connected vertex set (interior) of a tree together with the outside
// vertices adjacent to it (boundary).  The closure is interior + boundary.
// Annuli between adjacent vertices have an empty interior and are carried by
// the single edge between their two boundary vertices.
struct SubTree {
  std::set<VertexId> interior;
  std::set<VertexId> boundary;
  std::set<Edge> boundary_edges;

  std::set<VertexId> closure() const {
    std::set<VertexId> c = interior;
    c.insert(boundary.begin(), boundary.end());
    return c;
  }
  bool contains(const VertexId& v) const { return interior.count(v) > 0; }
  friend bool operator==(const SubTree& a, const SubTree& b) {
    return a.interior == b.interior && a.boundary_edges == b.boundary_edges;
  }
};

class CombTree {
 public:
  CombTree() = default;
  // Throws TreeError when the structural invariants fail.
  CombTree(std::vector<VertexId> vertices, std::vector<Edge> edges, std::map<std::string, VertexId> leaves);

  // Invariant violations without throwing.
  static std::vector<std::string> check(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges,
                                        const std::map<std::string, VertexId>& leaves);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::map<std::string, VertexId>& leaves() const { return leaves_; }
  const std::set<VertexId>& neighbors(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const { return adj_.count(v) > 0; }
  bool has_edge(const VertexId& u, const VertexId& v) const { return edges_.count(make_edge(u, v)) > 0; }
  int valence(const VertexId& v) const { return (int)neighbors(v).size(); }
  bool is_leaf(const VertexId& v) const { return label_of_.count(v) > 0; }
  bool is_internal(const VertexId& v) const { return has_vertex(v) && !is_leaf(v); }
  const std::string& label_of(const VertexId& v) const;
  const VertexId& leaf(const std::string& label) const;
  bool has_label(const std::string& label) const { return leaves_.count(label) > 0; }
  std::vector<VertexId> internal_vertices() const;

  std::vector<VertexId> path(const VertexId& u, const VertexId& v) const;
  // Neighbor of v on the path toward target (v != target).
  VertexId toward(const VertexId& v, const VertexId& target) const;
  // Component of T - {v} containing star.
  SubTree branch(const VertexId& v, const VertexId& star) const;
  // Open annulus ]]v1, v2[[ = B_{v1}(v2) cap B_{v2}(v1).
  SubTree annulus(const VertexId& v1, const VertexId& v2) const;
  SubTree whole() const;
  // Sum over interior vertices of (2 - valence in this tree).
  int euler_char(const SubTree& s) const;
  // Interior vertex set -> subtree with computed boundary.
  SubTree subtree_from(const std::set<VertexId>& interior) const;
  // Connected components of an arbitrary vertex set.
  std::vector<std::set<VertexId>> components(const std::set<VertexId>& vs) const;
  // Labels of the leaves inside a vertex set.
  std::set<std::string> labels_in(const std::set<VertexId>& vs) const;
  // Does v separate the three vertices (lie on the pairwise paths, all in distinct branches)?
  bool separates(const VertexId& v, const std::vector<VertexId>& others) const;
  // Median of three vertices.
  VertexId median(const VertexId& a, const VertexId& b, const VertexId& c) const;
  // Smallest subtree containing the given vertices (vertex set).
  std::set<VertexId> hull(const std::vector<VertexId>& vs) const;

 private:
  std::vector<VertexId> vertices_;
  std::set<Edge> edges_;
  std::map<std::string, VertexId> leaves_;
  std::map<VertexId, std::string> label_of_;
  std::map<VertexId, std::set<VertexId>> adj_;
};

}  // namespace artifact
