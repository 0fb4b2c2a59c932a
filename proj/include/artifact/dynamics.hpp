#pragma once
// Dynamical systems of trees of spheres: a cover plus an invariant tree T^X.

#include <optional>

#include "artifact/cover.hpp"

namespace artifact {

struct DynamicalTreeSystem {
  CoverBetweenTrees cover;
  TreeOfSpheres treeX;
  // internal T^X vertex -> (T^Y vertex, T^Z vertex)
  std::map<VertexId, std::pair<VertexId, VertexId>> shared;

  const VertexId& in_Y(const VertexId& x) const;
  const VertexId& in_Z(const VertexId& x) const;
  // T^X vertex sharing the given T^Z vertex, if any.
  std::optional<VertexId> from_Z(const VertexId& z) const;
  std::optional<VertexId> from_Y(const VertexId& y) const;
  // F on internal T^X vertices; nullopt when the image is forgotten.
  std::optional<VertexId> step(const VertexId& x) const;
  // f_v for a T^X vertex (as a map of the shared sphere).
  const RationalFunction& sphere_map(const VertexId& x) const;
  int degree(const VertexId& x) const { return cover.vertex_degree(in_Y(x)); }
};

std::vector<Violation> validate_system(const DynamicalTreeSystem& S);

struct OrbitRecord {
  std::vector<VertexId> orbit;       // v, F(v), ... (T^X vertices)
  std::optional<int> forgotten_at;   // index k with F^k(v) not in T^X
  std::optional<int> preperiod;      // first index of the cycle
  std::optional<int> period;
};
OrbitRecord vertex_orbit(const DynamicalTreeSystem& S, const VertexId& v, int kmax);

struct SphereCycle {
  std::vector<VertexId> vertices;
  int period = 0;
  int cycle_degree = 1;
  bool critical() const { return cycle_degree >= 2; }
};

// All F-cycles of internal T^X vertices.
std::vector<SphereCycle> sphere_cycles(const DynamicalTreeSystem& S);
std::vector<SphereCycle> critical_cycles(const DynamicalTreeSystem& S);
// Rotate a cycle to start at v.
SphereCycle rebase(const SphereCycle& c, const VertexId& v);
// f_{v_{p-1}} o ... o f_{v_0}
RationalFunction cycle_cover(const DynamicalTreeSystem& S, const SphereCycle& c);

enum class Tristate { False, True, Unknown };
// Exact orbits are abandoned once a point exceeds this many bits.
inline constexpr size_t kOrbitHeightBits = 2048;
inline bool orbit_too_tall(const Point& p) { return !p.inf && height_bits(p.z) > kOrbitHeightBits; }

// Whether every critical orbit of the cycle cover is finite, within the cap.
Tristate post_critically_finite(const RationalFunction& g, int cap = 32);

}  // namespace artifact
