#pragma once

// Immutable simple undirected graphs on at most 64 vertices.
//
// Adjacency is stored as one 64-bit row per vertex. Every vertex also carries
// an origin label: the set of vertices of the root graph it stands for. A
// fresh graph labels vertex i with {i}; deletion keeps labels, contraction
// unions them. Labels are metadata and do not take part in equality.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_lab {

using VertexId = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr VertexId kNoVertex = -1;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold for the given input.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A constructive step that the theory guarantees has failed. Never swallowed.
class TheoremViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace bits {

constexpr VertexSet single(VertexId v) { return VertexSet{1} << v; }

constexpr VertexSet prefix(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, VertexId v) { return (s >> v) & 1U; }

constexpr int count(VertexSet s) { return std::popcount(s); }

constexpr VertexId lowest(VertexSet s) { return std::countr_zero(s); }

inline std::vector<VertexId> to_vector(VertexSet s) {
  std::vector<VertexId> out;
  out.reserve(count(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

inline VertexSet from_range(std::span<const VertexId> vs) {
  VertexSet s = 0;
  for (VertexId v : vs) s |= single(v);
  return s;
}

// Calls fn(v) for every member in increasing order.
template <typename Fn>
void for_each(VertexSet s, Fn&& fn) {
  for (; s != 0; s &= s - 1) fn(lowest(s));
}

}  // namespace bits

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph;

// Old -> new vertex map of a single edge contraction.
struct ContractionMap {
  Edge edge;
  std::vector<VertexId> vertex_map;
  VertexId merged = kNoVertex;

  VertexId operator()(VertexId old) const { return vertex_map.at(old); }

  // The (one or two) old vertices sent to `target`.
  std::vector<VertexId> preimage(VertexId target) const {
    std::vector<VertexId> out;
    for (VertexId old = 0; old < static_cast<VertexId>(vertex_map.size()); ++old)
      if (vertex_map[old] == target) out.push_back(old);
    return out;
  }
};

// Induced subgraph together with the new -> parent vertex map.
struct Restriction;

class Graph {
public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n) : adjacency_(checked_order(n), 0), origins_(n) {
    for (VertexId v = 0; v < n; ++v) origins_[v] = bits::single(v);
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n)
        throw GraphError("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "}");
      adjacency_[e.u] |= bits::single(e.v);
      adjacency_[e.v] |= bits::single(e.u);
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Build from adjacency rows. Rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows, std::vector<VertexSet> origins = {}) {
    Graph g;
    const int n = checked_order(static_cast<int>(rows.size()));
    const VertexSet all = bits::prefix(n);
    for (VertexId v = 0; v < n; ++v) {
      if (rows[v] & ~all) throw GraphError("adjacency row out of range");
      if (bits::contains(rows[v], v)) throw GraphError("loop at vertex " + std::to_string(v));
      bits::for_each(rows[v], [&](VertexId w) {
        if (!bits::contains(rows[w], v)) throw GraphError("asymmetric adjacency rows");
      });
    }
    g.adjacency_ = std::move(rows);
    if (origins.empty()) {
      g.origins_.resize(n);
      for (VertexId v = 0; v < n; ++v) g.origins_[v] = bits::single(v);
    } else {
      if (static_cast<int>(origins.size()) != n) throw GraphError("origin label count mismatch");
      g.origins_ = std::move(origins);
    }
    return g;
  }

  int order() const { return static_cast<int>(adjacency_.size()); }

  int size() const {
    int twice = 0;
    for (VertexSet row : adjacency_) twice += bits::count(row);
    return twice / 2;
  }

  VertexSet vertices() const { return bits::prefix(order()); }

  VertexSet neighbors(VertexId v) const { return adjacency_.at(v); }

  int degree(VertexId v) const { return bits::count(adjacency_.at(v)); }

  bool adjacent(VertexId a, VertexId b) const { return bits::contains(adjacency_.at(a), b); }

  bool has_edge(const Edge& e) const {
    return e.u >= 0 && e.v < order() && e.u != e.v && adjacent(e.u, e.v);
  }

  // Union of the neighbourhoods of all members of s (may intersect s).
  VertexSet neighbors_of(VertexSet s) const {
    VertexSet out = 0;
    bits::for_each(s, [&](VertexId v) { out |= adjacency_[v]; });
    return out;
  }

  // Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < order(); ++u)
      bits::for_each(adjacency_[u] & ~bits::prefix(u + 1), [&](VertexId v) { out.emplace_back(u, v); });
    return out;
  }

  int edges_within(VertexSet s) const {
    int twice = 0;
    bits::for_each(s, [&](VertexId v) { twice += bits::count(adjacency_[v] & s); });
    return twice / 2;
  }

  bool is_complete() const {
    const int n = order();
    return size() == n * (n - 1) / 2;
  }

  bool is_clique(VertexSet s) const {
    const int k = bits::count(s);
    return edges_within(s) == k * (k - 1) / 2;
  }

  const std::vector<VertexSet>& rows() const { return adjacency_; }

  // Root-graph vertices represented by v.
  VertexSet origin(VertexId v) const { return origins_.at(v); }

  const std::vector<VertexSet>& origins() const { return origins_; }

  // Same graph with labels reset to the identity.
  Graph relabeled_as_root() const { return from_rows(adjacency_); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
  static int checked_order(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    if (n > kMaxVertices)
      throw GraphError("graph has " + std::to_string(n) + " vertices; the limit is " +
                       std::to_string(kMaxVertices));
    return n;
  }

  std::vector<VertexSet> adjacency_;
  std::vector<VertexSet> origins_;
};

struct Restriction {
  Graph graph;
  std::vector<VertexId> to_parent;

  VertexSet lift(VertexSet s) const {
    VertexSet out = 0;
    bits::for_each(s, [&](VertexId v) { out |= bits::single(to_parent[v]); });
    return out;
  }
};

// Subgraph induced on `keep`, re-indexed densely in increasing vertex order.
inline Restriction induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep & ~g.vertices()) throw GraphError("unknown vertex in vertex set");
  Restriction r;
  r.to_parent = bits::to_vector(keep);
  std::vector<VertexId> to_new(g.order(), kNoVertex);
  for (VertexId i = 0; i < static_cast<VertexId>(r.to_parent.size()); ++i) to_new[r.to_parent[i]] = i;

  std::vector<VertexSet> rows(r.to_parent.size(), 0);
  std::vector<VertexSet> origins(r.to_parent.size(), 0);
  for (VertexId i = 0; i < static_cast<VertexId>(r.to_parent.size()); ++i) {
    const VertexId p = r.to_parent[i];
    bits::for_each(g.neighbors(p) & keep, [&](VertexId w) { rows[i] |= bits::single(to_new[w]); });
    origins[i] = g.origin(p);
  }
  r.graph = Graph::from_rows(std::move(rows), std::move(origins));
  return r;
}

inline Graph delete_vertices(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw GraphError("unknown vertex in deletion set");
  return induced_subgraph(g, g.vertices() & ~s).graph;
}

inline Graph delete_vertices(const Graph& g, std::span<const VertexId> s) {
  for (VertexId v : s)
    if (v < 0 || v >= g.order()) throw GraphError("unknown vertex " + std::to_string(v));
  return delete_vertices(g, bits::from_range(s));
}

inline Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw GraphError("edge not present");
  std::vector<VertexSet> rows = g.rows();
  rows[e.u] &= ~bits::single(e.v);
  rows[e.v] &= ~bits::single(e.u);
  return Graph::from_rows(std::move(rows), g.origins());
}

struct Contraction {
  Graph graph;
  ContractionMap map;
};

// G/e without loops or parallel edges. The merged vertex takes index e.u
// (the smaller endpoint); vertices above e.v shift down by one.
inline Contraction contract_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw GraphError("edge not present");
  const int n = g.order();
  Contraction c;
  c.map.edge = e;
  c.map.merged = e.u;
  c.map.vertex_map.resize(n);
  for (VertexId v = 0; v < n; ++v) c.map.vertex_map[v] = v == e.v ? e.u : (v > e.v ? v - 1 : v);

  std::vector<VertexSet> rows(n - 1, 0);
  std::vector<VertexSet> origins(n - 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId nv = c.map.vertex_map[v];
    origins[nv] |= g.origin(v);
    bits::for_each(g.neighbors(v), [&](VertexId w) {
      const VertexId nw = c.map.vertex_map[w];
      if (nw != nv) rows[nv] |= bits::single(nw);
    });
  }
  c.graph = Graph::from_rows(std::move(rows), std::move(origins));
  return c;
}

// Relabel: vertex v of g becomes perm[v].
inline Graph permute(const Graph& g, std::span<const VertexId> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  std::vector<VertexSet> rows(g.order(), 0);
  std::vector<VertexSet> origins(g.order(), 0);
  VertexSet seen = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (perm[v] < 0 || perm[v] >= g.order() || bits::contains(seen, perm[v]))
      throw GraphError("not a permutation");
    seen |= bits::single(perm[v]);
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    bits::for_each(g.neighbors(v), [&](VertexId w) { rows[perm[v]] |= bits::single(perm[w]); });
    origins[perm[v]] = g.origin(v);
  }
  return Graph::from_rows(std::move(rows), std::move(origins));
}

}  // namespace lambda_lab
