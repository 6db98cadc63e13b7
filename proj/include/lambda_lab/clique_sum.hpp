#pragma once

#include <array>
#include <vector>

#include "lambda_lab/graph.hpp"

namespace lambda_lab {

using Triangle = std::array<VertexId, 3>;

inline bool is_triangle(const Graph& g, const Triangle& t) {
  for (VertexId v : t)
    if (v < 0 || v >= g.order()) return false;
  return g.adjacent(t[0], t[1]) && g.adjacent(t[0], t[2]) && g.adjacent(t[1], t[2]);
}

inline VertexSet triangle_mask(const Triangle& t) {
  return bits::single(t[0]) | bits::single(t[1]) | bits::single(t[2]);
}

// Identifies first[i] in the first factor with second[i] in the second.
struct TriangleGluing {
  Triangle first;
  Triangle second;
};

struct CliqueSum {
  Graph graph;
  std::vector<VertexId> first_map;   // first factor -> sum
  std::vector<VertexId> second_map;  // second factor -> sum
};

// The first factor keeps its numbering; the second factor's vertices off the
// triangle are appended in increasing order.
inline CliqueSum clique_sum(const Graph& first, const Graph& second, const TriangleGluing& gluing) {
  if (!is_triangle(first, gluing.first) || !is_triangle(second, gluing.second))
    throw GraphError("invalid gluing: not a triangle in both factors");

  CliqueSum sum;
  sum.first_map.resize(first.order());
  for (VertexId v = 0; v < first.order(); ++v) sum.first_map[v] = v;
  sum.second_map.assign(second.order(), kNoVertex);
  for (int i = 0; i < 3; ++i) sum.second_map[gluing.second[i]] = gluing.first[i];
  VertexId next = first.order();
  for (VertexId v = 0; v < second.order(); ++v)
    if (sum.second_map[v] == kNoVertex) sum.second_map[v] = next++;

  std::vector<Edge> edges = first.edges();
  for (const Edge& e : second.edges()) edges.emplace_back(sum.second_map[e.u], sum.second_map[e.v]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  sum.graph = Graph(next, edges);
  return sum;
}

}  // namespace lambda_lab
