#pragma once
// Random trees whose internal vertices all have valence >= 3.

#include <random>

#include "artifact/tree.hpp"

namespace artifact::testing {

inline CombTree random_tree(std::mt19937& rng, int n_leaves) {
  std::vector<VertexId> vs{"n0", "x0", "x1", "x2"};
  std::vector<Edge> es{{"n0", "x0"}, {"n0", "x1"}, {"n0", "x2"}};
  std::map<std::string, VertexId> leaves{{"x0", "x0"}, {"x1", "x1"}, {"x2", "x2"}};
  int internal = 1;
  for (int k = 3; k < n_leaves; ++k) {
    VertexId leaf = "x" + std::to_string(k);
    vs.push_back(leaf);
    leaves[leaf] = leaf;
    if (rng() % 2 == 0) {
      // attach to an existing internal vertex
      VertexId n = "n" + std::to_string(rng() % internal);
      es.push_back({n, leaf});
    } else {
      // subdivide an edge and hang the leaf on the new vertex
      size_t i = rng() % es.size();
      auto [u, v] = es[i];
      VertexId n = "n" + std::to_string(internal++);
      vs.push_back(n);
      es[i] = {u, n};
      es.push_back({n, v});
      es.push_back({n, leaf});
    }
  }
  return CombTree(vs, es, leaves);
}

}  // namespace artifact::testing
