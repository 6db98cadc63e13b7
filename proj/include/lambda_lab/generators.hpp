#pragma once

// Named graph families, labeled exhaustive catalogs of 3-connected graphs,
// and seeded random 3-connected graphs grown from wheels.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lambda_lab/clique_sum.hpp"
#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/graph.hpp"

namespace lambda_lab {

enum class Family {
  complete,              // (n)       vertices 0..n-1
  wheel,                 // (n)       hub 0, rim cycle 1..n-1; W_n has n vertices
  prism,                 // (k = 3)   C_k x K_2: cycle 0..k-1, cycle k..2k-1, rungs i -- i+k
  cube,                  // (d = 3)   hypercube Q_d, vertices adjacent iff one bit differs
  complete_bipartite,    // (a, b)    sides 0..a-1 and a..a+b-1
  petersen,              // ()        outer 5-cycle 0..4, spokes i -- i+5, inner pentagram
  complete_minus_edge,   // (n)       K_n without the edge {0, 1}
  clique_sum_chain,      // (k, r)    r copies of K_k sharing the triangle {0, 1, 2}
  dodecahedron,          // ()        outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "wheel") return Family::wheel;
  if (name == "prism") return Family::prism;
  if (name == "cube") return Family::cube;
  if (name == "complete-bipartite") return Family::complete_bipartite;
  if (name == "petersen") return Family::petersen;
  if (name == "complete-minus-edge") return Family::complete_minus_edge;
  if (name == "clique-sum-chain") return Family::clique_sum_chain;
  if (name == "dodecahedron") return Family::dodecahedron;
  return std::nullopt;
}

namespace detail {

inline int param(const FamilySpec& spec, std::size_t i, int fallback, int lo, int hi, const char* what) {
  const int value = i < spec.params.size() ? spec.params[i] : fallback;
  if (value < lo || value > hi)
    throw PreconditionError(std::string("bad parameter ") + what + " = " + std::to_string(value));
  return value;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace detail

inline Graph make_family(const FamilySpec& spec) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::complete:
      return detail::complete_graph(detail::param(spec, 0, -1, 0, kMaxVertices, "n"));

    case Family::wheel: {
      const int n = detail::param(spec, 0, -1, 4, kMaxVertices, "n");
      for (VertexId i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i == n - 1 ? 1 : i + 1);
      }
      return Graph(n, edges);
    }

    case Family::prism: {
      const int k = detail::param(spec, 0, 3, 3, kMaxVertices / 2, "k");
      for (VertexId i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
      }
      return Graph(2 * k, edges);
    }

    case Family::cube: {
      const int d = detail::param(spec, 0, 3, 1, 6, "d");
      const int n = 1 << d;
      for (VertexId a = 0; a < n; ++a)
        for (int bit = 0; bit < d; ++bit)
          if (const VertexId b = a ^ (1 << bit); a < b) edges.emplace_back(a, b);
      return Graph(n, edges);
    }

    case Family::complete_bipartite: {
      const int a = detail::param(spec, 0, -1, 1, kMaxVertices - 1, "a");
      const int b = detail::param(spec, 1, -1, 1, kMaxVertices - a, "b");
      for (VertexId x = 0; x < a; ++x)
        for (VertexId y = a; y < a + b; ++y) edges.emplace_back(x, y);
      return Graph(a + b, edges);
    }

    case Family::petersen:
      for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      return Graph(10, edges);

    case Family::complete_minus_edge: {
      const int n = detail::param(spec, 0, -1, 2, kMaxVertices, "n");
      return delete_edge(detail::complete_graph(n), Edge(0, 1));
    }

    case Family::clique_sum_chain: {
      const int k = detail::param(spec, 0, -1, 3, kMaxVertices, "k");
      const int r = detail::param(spec, 1, -1, 1, kMaxVertices, "r");
      if (3 + r * (k - 3) > kMaxVertices) throw PreconditionError("clique-sum chain exceeds the vertex limit");
      const Graph piece = detail::complete_graph(k);
      const TriangleGluing gluing{{0, 1, 2}, {0, 1, 2}};
      Graph chain = piece;
      for (int i = 1; i < r; ++i) chain = clique_sum(chain, piece, gluing).graph;
      return chain;
    }

    case Family::dodecahedron:
      for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer pentagon
        edges.emplace_back(i, 5 + 2 * i);          // outer to middle
        edges.emplace_back(15 + i, 15 + (i + 1) % 5);  // inner pentagon
        edges.emplace_back(15 + i, 6 + 2 * i);     // inner to middle
      }
      for (VertexId i = 0; i < 10; ++i) edges.emplace_back(5 + i, 5 + (i + 1) % 10);
      return Graph(20, edges);
  }
  throw PreconditionError("unknown family");
}

// ---------------------------------------------------------------------------
// Exhaustive labeled catalogs

inline constexpr int kCatalogMin = 4;
inline constexpr int kCatalogMax = 8;

// Edge i of the catalog bit order is the i-th pair (a, b), a < b, in
// lexicographic order.
inline std::vector<Edge> catalog_pairs(int n) {
  std::vector<Edge> pairs;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

// Streams the 3-connected graphs on vertex set {0..n-1} whose edge-subset
// code lies in [first, last). Codes read bit i as catalog pair i, and are
// visited in increasing order.
class CatalogStream {
public:
  CatalogStream(int n, std::uint64_t first, std::uint64_t last) : n_(n), next_(first), last_(last) {
    if (n < kCatalogMin || n > kCatalogMax)
      throw PreconditionError("catalog order must lie in [" + std::to_string(kCatalogMin) + ", " +
                              std::to_string(kCatalogMax) + "]");
    for (const Edge& e : catalog_pairs(n)) {
      pair_u_.push_back(e.u);
      pair_v_.push_back(e.v);
    }
    last_ = std::min<std::uint64_t>(last_, code_count(n));
  }

  explicit CatalogStream(int n) : CatalogStream(n, 0, code_count(n)) {}

  static std::uint64_t code_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

  std::optional<Graph> next() {
    const int min_edges = (3 * n_ + 1) / 2;
    while (next_ < last_) {
      const std::uint64_t code = next_++;
      if (std::popcount(code) < min_edges) continue;
      std::vector<VertexSet> rows(n_, 0);
      for (std::uint64_t c = code; c != 0; c &= c - 1) {
        const int i = std::countr_zero(c);
        rows[pair_u_[i]] |= bits::single(pair_v_[i]);
        rows[pair_v_[i]] |= bits::single(pair_u_[i]);
      }
      if (std::any_of(rows.begin(), rows.end(), [](VertexSet r) { return bits::count(r) < 3; })) continue;
      Graph g = Graph::from_rows(std::move(rows));
      if (is_3_connected(g)) return g;
    }
    return std::nullopt;
  }

private:
  int n_;
  std::uint64_t next_;
  std::uint64_t last_;
  std::vector<VertexId> pair_u_;
  std::vector<VertexId> pair_v_;
};

// Every 3-connected graph on n labeled vertices, each exactly once.
template <typename Fn>
void for_each_catalog_graph(int n, Fn&& fn) {
  CatalogStream stream(n);
  while (std::optional<Graph> g = stream.next()) fn(*g);
}

inline std::vector<Graph> exhaustive_catalog(int n) {
  std::vector<Graph> out;
  for_each_catalog_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Random 3-connected graphs

namespace detail {

// Splits x into x and a new vertex y joined by an edge; x keeps `kept`, y
// takes the rest of N(x). Both sides must keep at least two old neighbours.
inline Graph split_vertex(const Graph& g, VertexId x, VertexSet kept) {
  const VertexId y = g.order();
  std::vector<VertexSet> rows = g.rows();
  rows.push_back(0);
  const VertexSet moved = g.neighbors(x) & ~kept;
  bits::for_each(moved, [&](VertexId w) {
    rows[w] &= ~bits::single(x);
    rows[w] |= bits::single(y);
  });
  rows[x] = kept | bits::single(y);
  rows[y] = moved | bits::single(x);
  return Graph::from_rows(std::move(rows));
}

}  // namespace detail

// Starts from a wheel, then interleaves vertex splits (degree >= 4, each side
// keeping >= 2 old neighbours) with random edge additions until the graph has
// n vertices and about m_target edges. Deterministic in seed.
inline Graph random_3_connected(int n, int m_target, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("random 3-connected graph needs n >= 4");
  if (n > kMaxVertices) throw PreconditionError("n exceeds the vertex limit");
  if (2 * m_target < 3 * n) throw PreconditionError("m_target must be at least 3n/2");
  if (m_target > n * (n - 1) / 2) throw PreconditionError("m_target exceeds the complete graph");

  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  // A rim of r gives 2r edges, and the n - r - 1 splits add one edge each.
  // K_4 has no vertex of degree 4 and no missing edge, so larger targets
  // start from a rim of at least 4.
  const int max_rim = std::min(n - 1, m_target - n + 1);
  const int rim = uniform(n == 4 ? 3 : 4, max_rim);
  Graph g = make_family({Family::wheel, {rim + 1}});

  auto add_random_edge = [&]() {
    std::vector<Edge> missing;
    for (VertexId a = 0; a < g.order(); ++a)
      for (VertexId b = a + 1; b < g.order(); ++b)
        if (!g.adjacent(a, b)) missing.emplace_back(a, b);
    if (missing.empty()) return false;
    const Edge e = missing[uniform(0, static_cast<int>(missing.size()) - 1)];
    std::vector<VertexSet> rows = g.rows();
    rows[e.u] |= bits::single(e.v);
    rows[e.v] |= bits::single(e.u);
    g = Graph::from_rows(std::move(rows));
    return true;
  };

  while (g.order() < n) {
    const int splits_left = n - g.order();
    const int additions_left = m_target - g.size() - splits_left;
    std::vector<VertexId> splittable;
    for (VertexId v = 0; v < g.order(); ++v)
      if (g.degree(v) >= 4) splittable.push_back(v);

    const bool add = splittable.empty() ||
                     (additions_left > 0 && uniform(0, splits_left + additions_left - 1) < additions_left);
    if (add) {
      add_random_edge();
      continue;
    }
    const VertexId x = splittable[uniform(0, static_cast<int>(splittable.size()) - 1)];
    std::vector<VertexId> nbrs = bits::to_vector(g.neighbors(x));
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    const int keep = uniform(2, static_cast<int>(nbrs.size()) - 2);
    VertexSet kept = 0;
    for (int i = 0; i < keep; ++i) kept |= bits::single(nbrs[i]);
    g = detail::split_vertex(g, x, kept);
  }
  while (g.size() < m_target && add_random_edge()) {
  }

  if (!is_3_connected(g)) throw TheoremViolation("random generator produced a graph that is not 3-connected");
  return g;
}

}  // namespace lambda_lab
