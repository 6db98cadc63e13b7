#pragma once

// Induced (chordless) cycles, the nonseparating ones C(G), the characteristic
// Lambda(G) = |C(G)| - |E(G)| + |V(G)|, and the cycle-space span check.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/graph6.hpp"

namespace lambda_lab {

// Vertex sequence of a cycle in canonical form: starts at its smallest vertex
// and continues towards the smaller of that vertex's two cycle neighbours.
class Cycle {
public:
  Cycle() = default;

  // Canonicalizes any rotation or reflection of the traversal order.
  explicit Cycle(std::vector<VertexId> traversal) : vertices_(std::move(traversal)) {
    if (vertices_.size() < 3) throw GraphError("a cycle needs at least 3 vertices");
    for (VertexId v : vertices_) {
      if (v < 0 || v >= kMaxVertices) throw GraphError("cycle vertex out of range");
      if (bits::contains(mask_, v)) throw GraphError("repeated vertex in cycle");
      mask_ |= bits::single(v);
    }
    canonicalize();
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexSet mask() const { return mask_; }
  int length() const { return static_cast<int>(vertices_.size()); }

  bool contains(VertexId v) const { return bits::contains(mask_, v); }

  // Cyclically consecutive pairs.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    return out;
  }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices_ == b.vertices_; }
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices_ <=> b.vertices_; }

private:
  void canonicalize() {
    const auto n = vertices_.size();
    const auto lo = static_cast<std::size_t>(std::min_element(vertices_.begin(), vertices_.end()) - vertices_.begin());
    const bool forward = vertices_[(lo + 1) % n] < vertices_[(lo + n - 1) % n];
    std::vector<VertexId> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = vertices_[forward ? (lo + i) % n : (lo + n - i) % n];
    vertices_ = std::move(out);
  }

  std::vector<VertexId> vertices_;
  VertexSet mask_ = 0;
};

// Sorted, duplicate-free cycles of one graph.
struct CycleSet {
  std::vector<Cycle> cycles;
  std::string fingerprint;  // graph6 of the owning graph

  std::size_t size() const { return cycles.size(); }
  bool contains(const Cycle& c) const { return std::binary_search(cycles.begin(), cycles.end(), c); }
  auto begin() const { return cycles.begin(); }
  auto end() const { return cycles.end(); }
};

// True iff consecutive vertices are adjacent in g.
inline bool is_cycle_of(const Graph& g, const Cycle& c) {
  if (c.mask() & ~g.vertices()) return false;
  for (const Edge& e : c.edges())
    if (!g.adjacent(e.u, e.v)) return false;
  return true;
}

// A cycle of g with no chord.
inline bool is_induced_cycle(const Graph& g, const Cycle& c) {
  return is_cycle_of(g, c) && g.edges_within(c.mask()) == c.length();
}

namespace detail {

// Extends the chordless path s, ..., tail. `blocked` holds the neighbours of
// the path's interior vertices.
inline void extend_chordless(const Graph& g, VertexSet above_start, std::vector<VertexId>& path,
                             VertexSet in_path, VertexSet blocked, std::vector<Cycle>& out) {
  const VertexId start = path.front();
  const VertexId tail = path.back();
  const VertexSet candidates = g.neighbors(tail) & above_start & ~in_path & ~blocked;
  bits::for_each(candidates, [&](VertexId w) {
    if (g.adjacent(w, start)) {
      // Each cycle is seen in both directions; keep the canonical one.
      if (path[1] < w) {
        path.push_back(w);
        out.emplace_back(path);
        path.pop_back();
      }
      return;
    }
    path.push_back(w);
    extend_chordless(g, above_start, path, in_path | bits::single(w), blocked | g.neighbors(tail), out);
    path.pop_back();
  });
}

}  // namespace detail

// Chordless cycles by growing chordless paths from each cycle's smallest
// vertex.
inline CycleSet induced_cycles(const Graph& g) {
  CycleSet set;
  set.fingerprint = write_graph6(g);
  std::vector<VertexId> path;
  for (VertexId s = 0; s < g.order(); ++s) {
    const VertexSet above = g.vertices() & ~bits::prefix(s + 1);
    bits::for_each(g.neighbors(s) & above, [&](VertexId a) {
      path = {s, a};
      detail::extend_chordless(g, above, path, bits::single(s) | bits::single(a), 0, set.cycles);
    });
  }
  std::sort(set.cycles.begin(), set.cycles.end());
  return set;
}

// Reference enumerator: every vertex subset whose induced subgraph is
// connected and 2-regular. Exponential in |V|; refuses more than 24 vertices.
inline CycleSet induced_cycles_by_subsets(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw PreconditionError("subset enumeration is limited to 24 vertices");
  CycleSet set;
  set.fingerprint = write_graph6(g);
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    if (bits::count(s) < 3) continue;
    bool two_regular = true;
    bits::for_each(s, [&](VertexId v) { two_regular = two_regular && bits::count(g.neighbors(v) & s) == 2; });
    if (!two_regular || !is_connected_within(g, s)) continue;
    std::vector<VertexId> order{bits::lowest(s)};
    VertexSet used = bits::single(order.front());
    while (static_cast<int>(order.size()) < bits::count(s)) {
      const VertexSet next = g.neighbors(order.back()) & s & ~used;
      order.push_back(bits::lowest(next));
      used |= bits::single(order.back());
    }
    set.cycles.emplace_back(std::move(order));
  }
  std::sort(set.cycles.begin(), set.cycles.end());
  return set;
}

// G - V(C) connected; the empty remainder counts as connected.
inline bool is_nonseparating(const Graph& g, const Cycle& c) {
  if (!is_cycle_of(g, c)) throw GraphError("cycle not in graph");
  return is_connected_within(g, g.vertices() & ~c.mask());
}

inline CycleSet nonseparating_induced_cycles(const Graph& g) {
  CycleSet all = induced_cycles(g);
  std::erase_if(all.cycles, [&](const Cycle& c) { return !is_connected_within(g, g.vertices() & ~c.mask()); });
  return all;
}

struct Characteristic {
  std::int64_t lambda = 0;
  std::int64_t cycle_count = 0;
  std::int64_t edge_count = 0;
  std::int64_t vertex_count = 0;
};

inline Characteristic characteristic_from(const Graph& g, const CycleSet& nonseparating) {
  Characteristic ch;
  ch.cycle_count = static_cast<std::int64_t>(nonseparating.size());
  ch.edge_count = g.size();
  ch.vertex_count = g.order();
  ch.lambda = ch.cycle_count - ch.edge_count + ch.vertex_count;
  return ch;
}

inline Characteristic characteristic(const Graph& g) {
  return characteristic_from(g, nonseparating_induced_cycles(g));
}

struct CycleSpanCheck {
  bool spans = false;
  int rank = 0;
  int cycle_space_dimension = 0;
};

// GF(2) rank of the edge-incidence vectors of C(G), compared against the
// cycle-space dimension |E| - |V| + 1.
inline CycleSpanCheck cycle_space_rank_check(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cycle-space rank check needs a connected graph");
  const std::vector<Edge> edge_list = g.edges();
  const int m = static_cast<int>(edge_list.size());
  const int words = (m + 63) / 64;

  std::vector<int> edge_index(static_cast<std::size_t>(g.order()) * g.order(), -1);
  for (int i = 0; i < m; ++i) edge_index[edge_list[i].u * g.order() + edge_list[i].v] = i;

  // basis[p] has its lowest set bit at p.
  std::vector<std::vector<std::uint64_t>> basis(m);
  std::vector<bool> occupied(m, false);
  int rank = 0;
  for (const Cycle& c : nonseparating_induced_cycles(g)) {
    std::vector<std::uint64_t> row(words, 0);
    for (const Edge& e : c.edges()) {
      const int i = edge_index[e.u * g.order() + e.v];
      row[i / 64] ^= std::uint64_t{1} << (i % 64);
    }
    auto lowest_bit = [&]() {
      for (int w = 0; w < words; ++w)
        if (row[w] != 0) return w * 64 + std::countr_zero(row[w]);
      return -1;
    };
    for (int pivot = lowest_bit(); pivot >= 0; pivot = lowest_bit()) {
      if (!occupied[pivot]) {
        basis[pivot] = std::move(row);
        occupied[pivot] = true;
        ++rank;
        break;
      }
      for (int k = 0; k < words; ++k) row[k] ^= basis[pivot][k];
    }
  }
  CycleSpanCheck result;
  result.rank = rank;
  result.cycle_space_dimension = m - g.order() + 1;
  result.spans = rank == result.cycle_space_dimension;
  return result;
}

}  // namespace lambda_lab
