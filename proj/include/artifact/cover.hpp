#pragma once
// Trees of spheres and covers between them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artifact/portrait.hpp"
#include "artifact/ratfunc.hpp"
#include "artifact/tree.hpp"

namespace artifact {

struct TreeOfSpheres {
  CombTree tree;
  // internal vertex -> neighbor -> attachment point on the sphere of the vertex
  std::map<VertexId, std::map<VertexId, Point>> attach;

  const Point& att(const VertexId& v, const VertexId& nb) const;
  // a_v(label): attachment of the edge at v leading to the leaf.
  Point a(const VertexId& v, const Label& label) const;
  std::vector<Violation> validate() const;
  // A skeleton tree: no sphere data at all.
  bool combinatorial() const { return attach.empty(); }
};

struct InconsistentDegree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoverBetweenTrees {
  Portrait portrait;
  TreeOfSpheres source;  // marked by Y
  TreeOfSpheres target;  // marked by Z
  std::map<VertexId, VertexId> F;
  std::map<VertexId, RationalFunction> maps;
  // Skeleton data, used only where maps are absent.
  std::map<VertexId, int> skeleton_degree;
  std::map<Edge, int> skeleton_edge_degree;

  bool has_map(const VertexId& v) const { return maps.count(v) > 0; }
  const VertexId& image(const VertexId& v) const;
  int vertex_degree(const VertexId& v) const;
  // Local degree along the edge {u, v} of the source tree.
  int edge_degree(const VertexId& u, const VertexId& v) const;
  bool is_skeleton() const;
  // Labels of critical leaves in a source vertex set.
  std::vector<Label> critical_leaves_in(const std::set<VertexId>& vs) const;
};

std::vector<Violation> validate_cover(const CoverBetweenTrees& C);
int global_degree(const CoverBetweenTrees& C);

// Components of F^{-1}(T'') as source subtrees.
std::vector<SubTree> preimage_components(const CoverBetweenTrees& C, const SubTree& target_sub);

struct RHReport {
  int chi_source = 0;
  int degree = 0;
  int chi_target = 0;
  int critical_multiplicity = 0;
  bool degree_consistent = true;
  bool holds() const { return degree_consistent && chi_source == degree * chi_target - critical_multiplicity; }
};

// chi(T') = deg(F|T') chi(T'') - sum over critical leaves in T' of (deg - 1).
RHReport rh_check(const CoverBetweenTrees& C, const SubTree& target_sub, const SubTree& source_component);

struct RHSuiteReport {
  int branches = 0;    // target branches checked
  int annuli = 0;      // target annulus closures checked
  int components = 0;  // preimage components checked
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// rh_check on every preimage component of every branch and annulus closure of
// the target, plus chi = 1 on branches and chi = 0 on annulus closures of
// both trees.
RHSuiteReport rh_suite(const CoverBetweenTrees& C);

struct BranchImage {
  bool applicable = true;
  std::string note;
  SubTree image;
  VertexId image_vertex;
  Point attaching_point;
  int degree = 0;
  bool onto = false;       // F(B) equals the image branch
  bool bijective = false;  // and F is injective on B
};
// B = branch(v, star) of the source tree.
BranchImage map_branch(const CoverBetweenTrees& C, const VertexId& v, const VertexId& star);

struct AnnulusImage {
  bool applicable = true;
  std::string note;
  SubTree image;
  int degree = 0;
  bool spine_degree_one = false;
  bool bijective_on_closure = false;
};
AnnulusImage map_annulus(const CoverBetweenTrees& C, const VertexId& v1, const VertexId& v2);

}  // namespace artifact
