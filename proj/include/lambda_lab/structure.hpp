#pragma once

// Separating-triangle decomposition, contractible edges that keep both
// 3-connectivity and the Hadwiger number, and the lifting map psi from
// C(G/e) into C(G).

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lambda_lab/clique_sum.hpp"
#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/cycles.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/minors.hpp"

namespace lambda_lab {

// Triangles whose deletion disconnects g, in lexicographic order.
inline std::vector<Triangle> separating_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const VertexSet all = g.vertices();
  for (VertexId a = 0; a < g.order(); ++a) {
    bits::for_each(g.neighbors(a) & ~bits::prefix(a + 1), [&](VertexId b) {
      bits::for_each(g.neighbors(a) & g.neighbors(b) & ~bits::prefix(b + 1), [&](VertexId c) {
        const Triangle t{a, b, c};
        if (!is_connected_within(g, all & ~triangle_mask(t))) out.push_back(t);
      });
    });
  }
  return out;
}

struct DecompositionFactor {
  Graph graph;
  std::vector<VertexId> to_parent;  // factor vertex -> vertex of the decomposed graph
  Triangle triangle;                // the separating triangle in factor numbering
};

struct Decomposition {
  Triangle triangle;
  std::vector<DecompositionFactor> factors;
};

// One factor H_i + T per component H_i of G - T, ordered by the smallest
// vertex of H_i.
inline Decomposition decompose_at_triangle(const Graph& g, Triangle t) {
  std::sort(t.begin(), t.end());
  if (!is_triangle(g, t)) throw PreconditionError("not a triangle of the graph");
  if (!is_connected(g)) throw PreconditionError("decomposition needs a connected graph");
  const VertexSet tmask = triangle_mask(t);
  const std::vector<VertexSet> parts = components_within(g, g.vertices() & ~tmask);
  if (parts.size() < 2) throw PreconditionError("triangle is not separating");

  Decomposition d;
  d.triangle = t;
  for (VertexSet part : parts) {
    Restriction r = induced_subgraph(g, part | tmask);
    DecompositionFactor f;
    for (int i = 0; i < 3; ++i)
      f.triangle[i] = static_cast<VertexId>(std::find(r.to_parent.begin(), r.to_parent.end(), t[i]) -
                                            r.to_parent.begin());
    f.graph = std::move(r.graph);
    f.to_parent = std::move(r.to_parent);
    d.factors.push_back(std::move(f));
  }
  return d;
}

// Re-expresses a cycle of a derived graph in the numbering of its parent.
inline Cycle lift_cycle(const Cycle& c, const std::vector<VertexId>& to_parent) {
  std::vector<VertexId> out;
  out.reserve(c.vertices().size());
  for (VertexId v : c.vertices()) out.push_back(to_parent.at(v));
  return Cycle(std::move(out));
}

inline std::vector<Triangle> triangles_through_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw GraphError("edge not present");
  std::vector<Triangle> out;
  bits::for_each(g.neighbors(e.u) & g.neighbors(e.v), [&](VertexId w) {
    Triangle t{e.u, e.v, w};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  });
  return out;
}

struct ContractibleEdge {
  Edge edge;
  Contraction contraction;
  HadwigerResult before;  // h(G)
  HadwigerResult after;   // h(G/e), equal to before.h
};

// First edge e in lexicographic order with G/e 3-connected and
// h(G/e) = h(G). Running out of edges is reported as a TheoremViolation.
inline ContractibleEdge find_contractible_edge(const Graph& g, const std::optional<HadwigerResult>& known = {}) {
  if (g.is_complete()) throw PreconditionError("graph is complete");
  if (!is_3_connected(g)) throw PreconditionError("graph is not 3-connected");
  const HadwigerResult before = known ? *known : hadwiger_number(g);
  for (const Edge& e : g.edges()) {
    Contraction c = contract_edge(g, e);
    if (!is_3_connected(c.graph)) continue;
    HadwigerResult after = hadwiger_number(c.graph);
    if (after.h != before.h) continue;
    return ContractibleEdge{e, std::move(c), before, std::move(after)};
  }
  throw TheoremViolation("no edge keeps both 3-connectivity and the Hadwiger number (" +
                         std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges)");
}

enum class PsiRule {
  avoids_merged,  // C misses v_e: psi(C) = C
  add_u,          // only u sees both path ends
  add_v,          // only v sees both path ends
  tie_u,          // both see both ends; u kept
  tie_v,          // both see both ends; u separating, switched to v
  add_both,       // neither sees both ends: psi(C) = C - v_e + u + v
};

inline const char* to_string(PsiRule r) {
  switch (r) {
    case PsiRule::avoids_merged: return "avoids";
    case PsiRule::add_u: return "add_u";
    case PsiRule::add_v: return "add_v";
    case PsiRule::tie_u: return "tie_u";
    case PsiRule::tie_v: return "tie_v";
    case PsiRule::add_both: return "add_both";
  }
  return "?";
}

struct PsiEntry {
  Cycle source;  // in G/e
  Cycle image;   // in G
  PsiRule rule;
};

struct PsiTable {
  Edge edge;
  ContractionMap map;
  std::vector<PsiEntry> entries;

  std::size_t image_size() const { return entries.size(); }
};

// Contract e inside a cycle of G: map every vertex, then merge the
// consecutive pair u, v if both occur. Returns nothing when the result has
// fewer than three vertices (a triangle through e).
inline std::optional<Cycle> reduce_through_contraction(const Cycle& c, const ContractionMap& map) {
  std::vector<VertexId> mapped;
  for (VertexId v : c.vertices()) {
    const VertexId w = map(v);
    if (mapped.empty() || mapped.back() != w) mapped.push_back(w);
  }
  while (mapped.size() > 1 && mapped.front() == mapped.back()) mapped.pop_back();
  if (mapped.size() < 3) return std::nullopt;
  return Cycle(std::move(mapped));
}

namespace detail {

inline bool in_nonseparating_set(const Graph& g, const Cycle& c) {
  return is_induced_cycle(g, c) && is_connected_within(g, g.vertices() & ~c.mask());
}

}  // namespace detail

inline PsiTable psi_injection(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw GraphError("edge not present");
  if (!is_3_connected(g)) throw PreconditionError("graph is not 3-connected");

  const Contraction contraction = contract_edge(g, e);
  const Graph& minor = contraction.graph;
  const ContractionMap& map = contraction.map;
  const VertexId merged = map.merged;
  const VertexId u = e.u;
  const VertexId v = e.v;

  // Unique preimage of every vertex other than v_e.
  std::vector<VertexId> lift(minor.order(), kNoVertex);
  for (VertexId old = 0; old < g.order(); ++old)
    if (map(old) != merged) lift[map(old)] = old;

  PsiTable table;
  table.edge = e;
  table.map = map;

  for (const Cycle& source : nonseparating_induced_cycles(minor)) {
    PsiEntry entry{source, Cycle{}, PsiRule::avoids_merged};
    if (!source.contains(merged)) {
      entry.image = lift_cycle(source, lift);
    } else {
      // Rotate so that v_e comes first; the rest is the path x ... y.
      std::vector<VertexId> seq = source.vertices();
      std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), merged), seq.end());
      std::vector<VertexId> path;
      for (std::size_t i = 1; i < seq.size(); ++i) path.push_back(lift[seq[i]]);
      const VertexId x = path.front();
      const VertexId y = path.back();
      const bool u_sees_both = g.adjacent(u, x) && g.adjacent(u, y);
      const bool v_sees_both = g.adjacent(v, x) && g.adjacent(v, y);

      auto with = [&](std::initializer_list<VertexId> extra) {
        std::vector<VertexId> cyc = path;
        cyc.insert(cyc.end(), extra);
        return Cycle(std::move(cyc));
      };

      if (u_sees_both && v_sees_both) {
        entry.image = with({u});
        entry.rule = PsiRule::tie_u;
        if (!detail::in_nonseparating_set(g, entry.image)) {
          entry.image = with({v});
          entry.rule = PsiRule::tie_v;
        }
      } else if (u_sees_both) {
        entry.image = with({u});
        entry.rule = PsiRule::add_u;
      } else if (v_sees_both) {
        entry.image = with({v});
        entry.rule = PsiRule::add_v;
      } else {
        // One endpoint sees only x, the other only y; walk y -> ... -> x.
        entry.image = g.adjacent(v, y) ? with({v, u}) : with({u, v});
        entry.rule = PsiRule::add_both;
      }
    }
    table.entries.push_back(std::move(entry));
  }

  // Every value must be a nonseparating induced cycle of G that reduces back
  // to its source, the map must be injective, and no value may be a triangle
  // through e.
  std::set<Cycle> seen;
  for (const PsiEntry& entry : table.entries) {
    if (!detail::in_nonseparating_set(g, entry.image))
      throw TheoremViolation("psi value is not a nonseparating induced cycle of G");
    const std::optional<Cycle> back = reduce_through_contraction(entry.image, map);
    if (!back || *back != entry.source) throw TheoremViolation("psi value does not contract back to its source");
    if (!seen.insert(entry.image).second) throw TheoremViolation("psi is not injective");
    if (entry.image.length() == 3 && entry.image.contains(u) && entry.image.contains(v))
      throw TheoremViolation("psi value is a triangle through the contracted edge");
  }
  return table;
}

}  // namespace lambda_lab
