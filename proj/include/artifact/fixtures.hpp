#pragma once
// Programmatic builders for the fixture corpus.

#include <functional>
#include <string>
#include <vector>

#include "artifact/dynamics.hpp"

namespace artifact {

// "re,im[,re3,im3]" meaning (re + im i) + (re3 + im3 i) sqrt3, or "inf".
Scalar parse_scalar_spec(const std::string& s);
Point parse_point_spec(const std::string& s);

namespace fixtures {

// One sphere: its id and, for every neighbor (internal id or leaf label),
// the attaching point.
struct SphereSpec {
  VertexId v;
  std::vector<std::pair<std::string, std::string>> nbrs;
};

// Leaves get the label as vertex id.
TreeOfSpheres make_tree(const std::vector<SphereSpec>& spheres);

struct MapSpec {
  VertexId from, to;
  std::vector<std::string> num, den;  // lowest degree first
};

// Leaf images come from the portrait.
CoverBetweenTrees make_cover(Portrait P, TreeOfSpheres Y, TreeOfSpheres Z, const std::vector<MapSpec>& maps);

// Shared vertices keep the same id in all three trees.
DynamicalTreeSystem make_system(CoverBetweenTrees C, TreeOfSpheres X);

// Portrait from (y, F(y), deg) triples.
Portrait make_portrait(int d, const std::vector<std::tuple<Label, Label, int>>& F, const std::vector<Label>& X);

DynamicalTreeSystem fig_exmilnor2();
DynamicalTreeSystem fig_exmil();
// fig_exmil without the two-cycle a1, a2.
DynamicalTreeSystem fig_exmil_forgotten();
DynamicalTreeSystem fig1_counterexample();
DynamicalTreeSystem fig3_two_cycles();
// Two fixed spheres joined by a degree-1 edge; the multipliers at the
// attaching points are -1 and -1 (balanced) or -1 and -1/2 (unbalanced).
DynamicalTreeSystem rotation_pair_balanced();
DynamicalTreeSystem rotation_pair_unbalanced();
// One sphere, f = z^2.
DynamicalTreeSystem single_square();

// Degree-2 skeletons (no sphere maps) with three fixed leaves alpha, beta,
// gamma, critical leaves c, c1 over v, v1, and the other preimages alpha1,
// beta1, gamma1.  T^X is the single vertex w0 with the fixed leaves.
struct SkeletonSpec {
  std::vector<std::pair<VertexId, std::vector<std::string>>> Y, Z;  // internal vertex -> neighbors
  std::map<VertexId, VertexId> F;                                    // internal Y vertex -> Z vertex
  std::map<VertexId, int> degree;                                    // entries != 1
  std::vector<std::tuple<VertexId, VertexId, int>> edge_degree;      // internal edges, entries != 1
};
DynamicalTreeSystem make_fixed_point_skeleton(const SkeletonSpec& spec);

// w0 fixed and critical: no degeneration / one / both critical points on fixed points.
DynamicalTreeSystem fig5_triv();
DynamicalTreeSystem fig5_pol();
DynamicalTreeSystem fig5_b();
// w0 fixed of degree 1, critical v0 fixed on [w0, alpha].
DynamicalTreeSystem fig5_c2();
DynamicalTreeSystem fig5_parb();
// w0 not fixed.
DynamicalTreeSystem fig5_a1();

struct SystemFixture {
  std::string name;
  std::function<DynamicalTreeSystem()> build;
};
// Fixtures carrying full sphere data.
const std::vector<SystemFixture>& system_fixtures();
// The degree-2 configuration skeletons.
const std::vector<SystemFixture>& skeleton_fixtures();

}  // namespace fixtures
}  // namespace artifact
