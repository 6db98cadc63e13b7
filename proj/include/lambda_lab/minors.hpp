#pragma once

// Exact Hadwiger number by branch-and-bound search for complete-minor models.

#include <cmath>
#include <optional>
#include <vector>

#include "lambda_lab/clique_sum.hpp"
#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/graph.hpp"

namespace lambda_lab {

// Disjoint connected branch sets, pairwise joined by an edge of the host.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  int order() const { return static_cast<int>(branch_sets.size()); }

  std::vector<std::vector<VertexId>> as_lists() const {
    std::vector<std::vector<VertexId>> out;
    for (VertexSet b : branch_sets) out.push_back(bits::to_vector(b));
    return out;
  }
};

struct HadwigerResult {
  int h = 0;
  MinorModel witness;
};

// Standalone witness check, independent of the search.
inline bool is_valid_minor_model(const Graph& g, const MinorModel& model) {
  VertexSet used = 0;
  for (VertexSet b : model.branch_sets) {
    if (b == 0 || (b & ~g.vertices()) || (b & used)) return false;
    if (!is_connected_within(g, b)) return false;
    used |= b;
  }
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i)
    for (std::size_t j = i + 1; j < model.branch_sets.size(); ++j)
      if ((g.neighbors_of(model.branch_sets[i]) & model.branch_sets[j]) == 0) return false;
  return true;
}

namespace detail {

inline void grow_clique(const Graph& g, VertexSet clique, VertexSet candidates, VertexSet& best) {
  if (candidates == 0) {
    if (bits::count(clique) > bits::count(best)) best = clique;
    return;
  }
  if (bits::count(clique) + bits::count(candidates) <= bits::count(best)) return;
  while (candidates != 0) {
    if (bits::count(clique) + bits::count(candidates) <= bits::count(best)) return;
    const VertexId v = bits::lowest(candidates);
    candidates &= ~bits::single(v);
    grow_clique(g, clique | bits::single(v), candidates & g.neighbors(v), best);
  }
  if (bits::count(clique) > bits::count(best)) best = clique;
}

// Partitions a connected graph into exactly `target` connected, pairwise
// adjacent blocks. A connected host has a K_n model iff it has one covering
// every vertex: leftover vertices can always be absorbed into a neighbouring
// branch set.
class PartitionSearch {
public:
  PartitionSearch(const Graph& g, int target) : g_(g), target_(target) {
    // Breadth-first order: every vertex after the first has an earlier neighbour.
    const VertexSet all = g.vertices();
    VertexSet seen = bits::single(0);
    order_.push_back(0);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      bits::for_each(g.neighbors(order_[head]) & all & ~seen, [&](VertexId w) {
        seen |= bits::single(w);
        order_.push_back(w);
      });
    }
    // remaining_[i]: vertices at positions >= i.
    remaining_.assign(order_.size() + 1, 0);
    for (int i = static_cast<int>(order_.size()) - 1; i >= 0; --i)
      remaining_[i] = remaining_[i + 1] | bits::single(order_[i]);
  }

  std::optional<MinorModel> run() {
    blocks_.clear();
    if (assign(0)) return MinorModel{blocks_};
    return std::nullopt;
  }

private:
  bool feasible(VertexSet unassigned) const {
    const int open = static_cast<int>(blocks_.size());
    if (target_ - open > bits::count(unassigned)) return false;
    for (int i = 0; i < open; ++i) {
      const VertexSet b = blocks_[i];
      const VertexSet nb = g_.neighbors_of(b);
      if (open < target_ && (nb & unassigned) == 0) return false;
      if ((reach_within(g_, b | unassigned, b & (~b + 1)) & b) != b) return false;
      for (int j = i + 1; j < open; ++j) {
        if (nb & blocks_[j]) continue;
        if ((nb & unassigned) == 0 || (g_.neighbors_of(blocks_[j]) & unassigned) == 0) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == order_.size()) return static_cast<int>(blocks_.size()) == target_;
    const VertexId v = order_[pos];
    const VertexSet unassigned = remaining_[pos + 1];
    const VertexSet vbit = bits::single(v);

    if (static_cast<int>(blocks_.size()) < target_) {
      blocks_.push_back(vbit);
      if (feasible(unassigned) && assign(pos + 1)) return true;
      blocks_.pop_back();
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      blocks_[i] |= vbit;
      if (feasible(unassigned) && assign(pos + 1)) return true;
      blocks_[i] &= ~vbit;
    }
    return false;
  }

  const Graph& g_;
  int target_;
  std::vector<VertexId> order_;
  std::vector<VertexSet> remaining_;
  std::vector<VertexSet> blocks_;
};

}  // namespace detail

// A largest clique; ties go to the first one found in increasing vertex order.
inline VertexSet maximum_clique(const Graph& g) {
  VertexSet best = 0;
  detail::grow_clique(g, 0, g.vertices(), best);
  return best;
}

// Returns the first K_n model met by the search; branch sets are numbered by
// their first vertex in breadth-first order from the lowest vertex of the
// component searched. Components are tried in order of their lowest vertex.
inline std::optional<MinorModel> has_clique_minor(const Graph& g, int n) {
  if (n < 1) throw PreconditionError("clique minor order must be at least 1");
  if (n > g.order()) return std::nullopt;

  for (VertexSet comp : components(g)) {
    if (bits::count(comp) < n) continue;
    const Restriction sub = induced_subgraph(g, comp);
    if (sub.graph.size() < n * (n - 1) / 2) continue;
    std::optional<MinorModel> model;
    if (sub.graph.is_complete()) {
      model.emplace();
      for (VertexId v = 0; v < n; ++v) model->branch_sets.push_back(bits::single(v));
    } else {
      model = detail::PartitionSearch(sub.graph, n).run();
    }
    if (model) {
      for (VertexSet& b : model->branch_sets) b = sub.lift(b);
      return model;
    }
  }
  return std::nullopt;
}

inline HadwigerResult hadwiger_number(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("Hadwiger number needs at least one vertex");
  HadwigerResult result;
  const VertexSet clique = maximum_clique(g);
  result.h = bits::count(clique);
  bits::for_each(clique, [&](VertexId v) { result.witness.branch_sets.push_back(bits::single(v)); });

  const int m = g.size();
  while (result.h < g.order() && (result.h + 1) * result.h / 2 <= m) {
    std::optional<MinorModel> model = has_clique_minor(g, result.h + 1);
    if (!model) break;
    ++result.h;
    result.witness = std::move(*model);
  }
  return result;
}

struct CliqueSumHadwiger {
  bool holds = false;
  int h_sum = 0;
  int h_first = 0;
  int h_second = 0;
};

// h(G1 (+)_T G2) = max(h(G1), h(G2)).
inline CliqueSumHadwiger clique_sum_hadwiger_check(const Graph& first, const Graph& second,
                                                   const TriangleGluing& gluing) {
  const CliqueSum sum = clique_sum(first, second, gluing);
  CliqueSumHadwiger out;
  out.h_sum = hadwiger_number(sum.graph).h;
  out.h_first = hadwiger_number(first).h;
  out.h_second = hadwiger_number(second).h;
  out.holds = out.h_sum == std::max(out.h_first, out.h_second);
  return out;
}

}  // namespace lambda_lab
