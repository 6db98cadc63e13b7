#pragma once

// The inequality lhs(h(G)) <= Lambda(G) for 3-connected G, certificates that
// replay its inductive proof step by step, and the colouring corollary.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/cycles.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/graph6.hpp"
#include "lambda_lab/minors.hpp"
#include "lambda_lab/structure.hpp"

namespace lambda_lab {

class CertificateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LhsValue {
  int h = 0;
  std::int64_t value = 0;
};

// C(h,3) - C(h,2) + C(h,1), which is also Lambda(K_h).
inline LhsValue lhs(int h) {
  if (h < 1) throw PreconditionError("lhs needs h >= 1");
  const std::int64_t n = h;
  return {h, n * (n - 1) * (n - 2) / 6 - n * (n - 1) / 2 + n};
}

struct MainInequality {
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t lambda = 0;
  int h = 0;
  Characteristic characteristic;
  MinorModel witness;

  std::int64_t slack() const { return lambda - lhs; }
};

inline MainInequality check_main_inequality(const Graph& g) {
  if (!is_3_connected(g)) throw PreconditionError("graph is not 3-connected");
  HadwigerResult hr = hadwiger_number(g);
  MainInequality out;
  out.characteristic = characteristic(g);
  out.h = hr.h;
  out.witness = std::move(hr.witness);
  out.lhs = lhs(out.h).value;
  out.lambda = out.characteristic.lambda;
  out.holds = out.lhs <= out.lambda;
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

// Decomposition at a separating triangle, continuing with one factor of the
// same Hadwiger number. The chain folds the factors back together one at a
// time starting from the chosen one: chain_lambdas[k] is Lambda of the
// clique-sum of the first k+1 factors in that order, so chain_lambdas.front()
// is lambda_after and chain_lambdas.back() is lambda_before.
struct DecomposeStep {
  std::string graph6;
  Triangle triangle{};
  int chosen = 0;
  std::vector<int> factor_hadwiger;
  std::vector<std::int64_t> factor_lambdas;
  std::vector<int> chain_order;
  std::vector<std::int64_t> chain_lambdas;
  std::int64_t lambda_before = 0;
  std::int64_t lambda_after = 0;
};

struct ContractStep {
  std::string graph6;
  Edge edge;
  std::int64_t lambda_before = 0;
  std::int64_t lambda_after = 0;
  std::int64_t cycles_before = 0;
  std::int64_t cycles_after = 0;
  std::int64_t triangles_through_edge = 0;
  std::int64_t edges_removed = 0;
  std::int64_t image_size = 0;
  int h_before = 0;
  int h_after = 0;
};

struct BaseStep {
  std::string graph6;
  int order = 0;
  std::int64_t lambda = 0;
};

using CertificateStep = std::variant<DecomposeStep, ContractStep, BaseStep>;

struct Certificate {
  std::string graph6;
  std::vector<CertificateStep> steps;
  int h = 0;
  std::int64_t lambda = 0;
  std::int64_t lhs = 0;
};

namespace detail {

inline std::vector<int> chain_order_for(int factors, int chosen) {
  std::vector<int> order{chosen};
  for (int i = 0; i < factors; ++i)
    if (i != chosen) order.push_back(i);
  return order;
}

// Lambda of the partial clique-sums, computed on induced subgraphs of g.
inline std::vector<std::int64_t> chain_lambdas(const Graph& g, const Decomposition& d,
                                               const std::vector<int>& order) {
  std::vector<std::int64_t> out;
  VertexSet acc = 0;
  for (int idx : order) {
    for (VertexId p : d.factors.at(idx).to_parent) acc |= bits::single(p);
    out.push_back(characteristic(induced_subgraph(g, acc).graph).lambda);
  }
  return out;
}

// Ledger of a decomposition step: every fold loses at most 2 and every added
// factor brings at least Lambda(K_4) = 2.
inline bool decompose_ledger_holds(const DecomposeStep& s) {
  if (s.chain_lambdas.size() != s.chain_order.size() || s.chain_lambdas.empty()) return false;
  for (std::size_t k = 1; k < s.chain_order.size(); ++k) {
    const std::int64_t added = s.factor_lambdas.at(s.chain_order[k]);
    if (added < 2) return false;
    if (s.chain_lambdas[k] < s.chain_lambdas[k - 1] + added - 2) return false;
    if (s.chain_lambdas[k] < s.chain_lambdas[k - 1]) return false;
  }
  return s.chain_lambdas.front() == s.lambda_after && s.chain_lambdas.back() == s.lambda_before &&
         s.lambda_before >= s.lambda_after;
}

// Lambda(G) - Lambda(G/e) = (|C(G)| - |im psi|) - (|T_e| + 1) + 1 >= 0, with
// the edge count identity |E(G)| - |E(G/e)| = |T_e| + 1 and
// |im psi| <= |C(G)| - |T_e|.
inline bool contract_ledger_holds(const ContractStep& s) {
  const std::int64_t drop = s.lambda_before - s.lambda_after;
  return s.edges_removed == s.triangles_through_edge + 1 &&
         s.image_size == s.cycles_after &&
         s.image_size <= s.cycles_before - s.triangles_through_edge &&
         drop == (s.cycles_before - s.image_size) - (s.triangles_through_edge + 1) + 1 && drop >= 0 &&
         s.h_before == s.h_after;
}

}  // namespace detail

// Replays the induction: decompose at the first separating triangle while one
// exists, otherwise contract the first suitable edge, until a complete graph
// of order h(G) remains.
inline Certificate certify(const Graph& g) {
  if (!is_3_connected(g)) throw PreconditionError("graph is not 3-connected");
  Certificate cert;
  cert.graph6 = write_graph6(g);
  const HadwigerResult root_h = hadwiger_number(g);
  cert.h = root_h.h;
  cert.lambda = characteristic(g).lambda;
  cert.lhs = lhs(cert.h).value;

  Graph current = g.relabeled_as_root();
  std::optional<HadwigerResult> current_h = root_h;
  while (true) {
    const std::string g6 = write_graph6(current);
    if (current.is_complete()) {
      if (current.order() != cert.h)
        throw TheoremViolation("reached K_" + std::to_string(current.order()) + " but h(G) = " +
                               std::to_string(cert.h));
      cert.steps.emplace_back(BaseStep{g6, current.order(), characteristic(current).lambda});
      return cert;
    }

    const std::vector<Triangle> separating = separating_triangles(current);
    if (!separating.empty()) {
      const Decomposition d = decompose_at_triangle(current, separating.front());
      DecomposeStep step;
      step.graph6 = g6;
      step.triangle = d.triangle;
      step.chosen = -1;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        step.factor_hadwiger.push_back(hadwiger_number(d.factors[i].graph).h);
        step.factor_lambdas.push_back(characteristic(d.factors[i].graph).lambda);
        if (step.chosen < 0 && step.factor_hadwiger.back() == cert.h) step.chosen = static_cast<int>(i);
      }
      if (step.chosen < 0) throw TheoremViolation("no decomposition factor keeps the Hadwiger number");
      step.chain_order = detail::chain_order_for(static_cast<int>(d.factors.size()), step.chosen);
      step.chain_lambdas = detail::chain_lambdas(current, d, step.chain_order);
      step.lambda_before = characteristic(current).lambda;
      step.lambda_after = step.factor_lambdas[step.chosen];
      if (!detail::decompose_ledger_holds(step)) throw TheoremViolation("decomposition ledger fails");
      current = d.factors[step.chosen].graph;
      current_h.reset();
      cert.steps.emplace_back(std::move(step));
      continue;
    }

    const ContractibleEdge ce = find_contractible_edge(current, current_h);
    const PsiTable psi = psi_injection(current, ce.edge);
    ContractStep step;
    step.graph6 = g6;
    step.edge = ce.edge;
    const Characteristic before = characteristic(current);
    const Characteristic after = characteristic(ce.contraction.graph);
    step.lambda_before = before.lambda;
    step.lambda_after = after.lambda;
    step.cycles_before = before.cycle_count;
    step.cycles_after = after.cycle_count;
    step.triangles_through_edge = static_cast<std::int64_t>(triangles_through_edge(current, ce.edge).size());
    step.edges_removed = before.edge_count - after.edge_count;
    step.image_size = static_cast<std::int64_t>(psi.image_size());
    step.h_before = ce.before.h;
    step.h_after = ce.after.h;
    if (!detail::contract_ledger_holds(step)) throw TheoremViolation("contraction ledger fails");
    current = ce.contraction.graph;
    current_h = ce.after;
    cert.steps.emplace_back(std::move(step));
  }
}

namespace detail {

// Recomputes one step on `current`; returns the graph the next step starts
// from, or nothing if the recorded step does not match.
inline std::optional<Graph> replay(const Graph& current, int root_h, const DecomposeStep& s) {
  if (!is_triangle(current, s.triangle)) return std::nullopt;
  Triangle t = s.triangle;
  std::sort(t.begin(), t.end());
  if (is_connected_within(current, current.vertices() & ~triangle_mask(t))) return std::nullopt;
  const Decomposition d = decompose_at_triangle(current, t);
  const int r = static_cast<int>(d.factors.size());
  if (s.chosen < 0 || s.chosen >= r) return std::nullopt;
  if (static_cast<int>(s.factor_hadwiger.size()) != r || static_cast<int>(s.factor_lambdas.size()) != r)
    return std::nullopt;
  for (int i = 0; i < r; ++i) {
    if (hadwiger_number(d.factors[i].graph).h != s.factor_hadwiger[i]) return std::nullopt;
    if (characteristic(d.factors[i].graph).lambda != s.factor_lambdas[i]) return std::nullopt;
  }
  if (s.factor_hadwiger[s.chosen] != root_h) return std::nullopt;
  if (s.chain_order != chain_order_for(r, s.chosen)) return std::nullopt;
  if (chain_lambdas(current, d, s.chain_order) != s.chain_lambdas) return std::nullopt;
  if (characteristic(current).lambda != s.lambda_before) return std::nullopt;
  if (s.factor_lambdas[s.chosen] != s.lambda_after) return std::nullopt;
  if (!decompose_ledger_holds(s)) return std::nullopt;
  return d.factors[s.chosen].graph;
}

inline std::optional<Graph> replay(const Graph& current, int root_h, const ContractStep& s) {
  if (!current.has_edge(s.edge)) return std::nullopt;
  if (!separating_triangles(current).empty()) return std::nullopt;
  const Contraction c = contract_edge(current, s.edge);
  if (!is_3_connected(c.graph)) return std::nullopt;

  const CycleSet cycles_before = nonseparating_induced_cycles(current);
  const CycleSet cycles_after = nonseparating_induced_cycles(c.graph);
  const std::vector<Triangle> te = triangles_through_edge(current, s.edge);
  // Every triangle is nonseparating here, so T_e lies inside C(G).
  for (const Triangle& t : te)
    if (!cycles_before.contains(Cycle({t[0], t[1], t[2]}))) return std::nullopt;
  const PsiTable psi = psi_injection(current, s.edge);

  const ContractStep recomputed{
      s.graph6,
      s.edge,
      static_cast<std::int64_t>(cycles_before.size()) - current.size() + current.order(),
      static_cast<std::int64_t>(cycles_after.size()) - c.graph.size() + c.graph.order(),
      static_cast<std::int64_t>(cycles_before.size()),
      static_cast<std::int64_t>(cycles_after.size()),
      static_cast<std::int64_t>(te.size()),
      current.size() - c.graph.size(),
      static_cast<std::int64_t>(psi.image_size()),
      hadwiger_number(current).h,
      hadwiger_number(c.graph).h,
  };
  if (recomputed.lambda_before != s.lambda_before || recomputed.lambda_after != s.lambda_after ||
      recomputed.cycles_before != s.cycles_before || recomputed.cycles_after != s.cycles_after ||
      recomputed.triangles_through_edge != s.triangles_through_edge ||
      recomputed.edges_removed != s.edges_removed || recomputed.image_size != s.image_size ||
      recomputed.h_before != s.h_before || recomputed.h_after != s.h_after)
    return std::nullopt;
  if (recomputed.h_before != root_h || !contract_ledger_holds(recomputed)) return std::nullopt;
  return c.graph;
}

}  // namespace detail

// Recomputes every step from g. False on any mismatch; CertificateError when
// the certificate is structurally unusable.
inline bool verify_certificate(const Graph& g, const Certificate& cert) {
  if (cert.steps.empty()) throw CertificateError("certificate has no steps");
  if (!std::holds_alternative<BaseStep>(cert.steps.back()))
    throw CertificateError("certificate does not end with a base step");
  if (cert.graph6 != write_graph6(g)) return false;
  if (!is_3_connected(g)) return false;

  const int h = hadwiger_number(g).h;
  if (cert.h != h || cert.lambda != characteristic(g).lambda || cert.lhs != lhs(h).value) return false;
  if (cert.lhs > cert.lambda) return false;

  Graph current = g.relabeled_as_root();
  std::int64_t previous_lambda = cert.lambda;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& step = cert.steps[i];
    const std::string& recorded_g6 = std::visit([](const auto& s) -> const std::string& { return s.graph6; }, step);
    if (recorded_g6 != write_graph6(current)) return false;

    if (const auto* base = std::get_if<BaseStep>(&step)) {
      if (i + 1 != cert.steps.size()) throw CertificateError("base step before the end");
      return current.is_complete() && current.order() == base->order && base->order == h &&
             characteristic(current).lambda == base->lambda && base->lambda == lhs(h).value &&
             base->lambda <= previous_lambda;
    }

    std::optional<Graph> next;
    std::int64_t before = 0;
    std::int64_t after = 0;
    if (const auto* dec = std::get_if<DecomposeStep>(&step)) {
      next = detail::replay(current, h, *dec);
      before = dec->lambda_before;
      after = dec->lambda_after;
    } else {
      const auto& con = std::get<ContractStep>(step);
      next = detail::replay(current, h, con);
      before = con.lambda_before;
      after = con.lambda_after;
    }
    if (!next || before != previous_lambda || after > before) return false;
    previous_lambda = after;
    current = std::move(*next);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Over-dominating colourings

class Colouring {
public:
  explicit Colouring(const std::vector<std::vector<VertexId>>& classes) {
    for (const auto& c : classes) {
      VertexSet s = 0;
      for (VertexId v : c) {
        if (v < 0 || v >= kMaxVertices) throw PreconditionError("colour class vertex out of range");
        if (bits::contains(s, v)) throw PreconditionError("vertex repeated in colour class");
        s |= bits::single(v);
      }
      if (s == 0) throw PreconditionError("empty colour class");
      classes_.push_back(s);
    }
  }

  int k() const { return static_cast<int>(classes_.size()); }
  const std::vector<VertexSet>& classes() const { return classes_; }

private:
  std::vector<VertexSet> classes_;
};

struct DominationViolation {
  enum class Kind { vertex_misses_class, pair_not_dominated };
  Kind kind;
  int first;   // vertex for vertex_misses_class, else a class index
  int second;  // class index
};

struct OverDomination {
  bool over_dominating = false;
  std::vector<DominationViolation> violations;
};

inline OverDomination is_over_dominating(const Graph& g, const Colouring& f) {
  VertexSet covered = 0;
  for (VertexSet c : f.classes()) {
    if ((c & covered) || (c & ~g.vertices())) throw PreconditionError("colour classes do not partition V");
    if (g.edges_within(c) != 0) throw PreconditionError("improper colouring");
    covered |= c;
  }
  if (covered != g.vertices()) throw PreconditionError("colour classes do not partition V");

  OverDomination out;
  const auto& cls = f.classes();
  const int k = f.k();
  for (int i = 0; i < k; ++i)
    bits::for_each(cls[i], [&](VertexId x) {
      for (int j = 0; j < k; ++j)
        if (j != i && (g.neighbors(x) & cls[j]) == 0)
          out.violations.push_back({DominationViolation::Kind::vertex_misses_class, x, j});
    });

  auto dominates = [&](VertexSet from, VertexSet to) {
    bool found = false;
    bits::for_each(from, [&](VertexId x) { found = found || (g.neighbors(x) & to) == to; });
    return found;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!dominates(cls[i], cls[j]) && !dominates(cls[j], cls[i]))
        out.violations.push_back({DominationViolation::Kind::pair_not_dominated, i, j});
  out.over_dominating = out.violations.empty();
  return out;
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d) {
    const std::int64_t g = std::gcd(n, d);
    return d < 0 ? Rational{-n / g, -d / g} : Rational{n / g, d / g};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CorollaryCheck {
  bool holds = false;
  bool hadwiger_bound_holds = false;  // h >= 1 + floor(2k/3)
  bool cycle_bound_holds = false;     // bound <= |C(G)|
  int k = 0;
  int q = 0;  // floor(2k/3)
  int h = 0;
  Rational bound;
  std::int64_t cycle_count = 0;
};

// |E| - |V| + q^3/6 - q^2/2 + q/3 + 1 <= |C(G)| with q = floor(2k/3),
// evaluated in sixths.
inline CorollaryCheck check_corollary(const Graph& g, const Colouring& f) {
  if (!is_3_connected(g)) throw PreconditionError("graph is not 3-connected");
  if (!is_over_dominating(g, f).over_dominating) throw PreconditionError("colouring is not over-dominating");
  CorollaryCheck out;
  out.k = f.k();
  out.q = 2 * out.k / 3;
  out.h = hadwiger_number(g).h;
  out.cycle_count = static_cast<std::int64_t>(nonseparating_induced_cycles(g).size());

  const std::int64_t q = out.q;
  const std::int64_t sixths = 6 * (static_cast<std::int64_t>(g.size()) - g.order()) + q * q * q - 3 * q * q + 2 * q + 6;
  out.bound = Rational::of(sixths, 6);
  out.hadwiger_bound_holds = out.h >= 1 + out.q;
  out.cycle_bound_holds = sixths <= 6 * out.cycle_count;
  out.holds = out.hadwiger_bound_holds && out.cycle_bound_holds;
  return out;
}

}  // namespace lambda_lab
