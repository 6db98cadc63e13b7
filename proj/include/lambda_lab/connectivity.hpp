#pragma once

#include <optional>
#include <vector>

#include "lambda_lab/graph.hpp"

namespace lambda_lab {

// Vertices reachable from `start` inside `alive`.
inline VertexSet reach_within(const Graph& g, VertexSet alive, VertexSet start) {
  VertexSet seen = start & alive;
  VertexSet frontier = seen;
  while (frontier != 0) {
    const VertexSet next = g.neighbors_of(frontier) & alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// An empty vertex set counts as connected.
inline bool is_connected_within(const Graph& g, VertexSet alive) {
  if (alive == 0) return true;
  return reach_within(g, alive, alive & (~alive + 1)) == alive;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

// Components of G[alive], ordered by their smallest vertex.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  while (alive != 0) {
    const VertexSet comp = reach_within(g, alive, alive & (~alive + 1));
    out.push_back(comp);
    alive &= ~comp;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

// A set of at most two vertices whose deletion disconnects the graph. The
// empty set means the graph itself is disconnected.
struct CutWitness {
  std::vector<VertexId> vertices;
};

struct ThreeConnectivity {
  bool three_connected = false;
  std::optional<CutWitness> witness;

  explicit operator bool() const { return three_connected; }
};

// G - S connected for every S with |S| <= 2. K_3 and K_4 qualify; so do K_1
// and K_2, vacuously. The returned witness has minimum size and is the
// lexicographically first such set.
inline ThreeConnectivity is_3_connected(const Graph& g) {
  const VertexSet all = g.vertices();
  if (!is_connected_within(g, all)) return {false, CutWitness{}};
  const int n = g.order();
  for (VertexId a = 0; a < n; ++a)
    if (!is_connected_within(g, all & ~bits::single(a))) return {false, CutWitness{{a}}};
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (!is_connected_within(g, all & ~bits::single(a) & ~bits::single(b)))
        return {false, CutWitness{{a, b}}};
  return {true, std::nullopt};
}

}  // namespace lambda_lab
