#pragma once

// JSON form of certificates and psi tables. Field order is fixed.

#include <nlohmann/json.hpp>

#include "lambda_lab/structure.hpp"
#include "lambda_lab/theorem.hpp"

namespace lambda_lab {

using Json = nlohmann::ordered_json;

inline Json cycle_to_json(const Cycle& c) {
  std::vector<VertexId> sorted = c.vertices();
  std::sort(sorted.begin(), sorted.end());
  return Json(sorted);
}

inline Json minor_model_to_json(const MinorModel& m) { return Json(m.as_lists()); }

inline Json step_to_json(const CertificateStep& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, DecomposeStep>) {
          j["kind"] = "decompose";
          j["graph"] = s.graph6;
          j["triangle"] = s.triangle;
          j["chosen"] = s.chosen;
          j["factor_hadwiger"] = s.factor_hadwiger;
          j["factor_lambdas"] = s.factor_lambdas;
          j["chain_order"] = s.chain_order;
          j["chain_lambdas"] = s.chain_lambdas;
          j["lambda_before"] = s.lambda_before;
          j["lambda_after"] = s.lambda_after;
        } else if constexpr (std::is_same_v<T, ContractStep>) {
          j["kind"] = "contract";
          j["graph"] = s.graph6;
          j["edge"] = {s.edge.u, s.edge.v};
          j["lambda_before"] = s.lambda_before;
          j["lambda_after"] = s.lambda_after;
          j["cycles_before"] = s.cycles_before;
          j["cycles_after"] = s.cycles_after;
          j["triangles_through_edge"] = s.triangles_through_edge;
          j["edges_removed"] = s.edges_removed;
          j["image_size"] = s.image_size;
          j["h_before"] = s.h_before;
          j["h_after"] = s.h_after;
        } else {
          j["kind"] = "base";
          j["graph"] = s.graph6;
          j["order"] = s.order;
          j["lambda"] = s.lambda;
        }
        return j;
      },
      step);
}

inline Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["graph"] = cert.graph6;
  j["steps"] = Json::array();
  for (const CertificateStep& s : cert.steps) j["steps"].push_back(step_to_json(s));
  j["h"] = cert.h;
  j["lambda"] = cert.lambda;
  j["lhs"] = cert.lhs;
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  try {
    Certificate cert;
    cert.graph6 = j.at("graph").get<std::string>();
    cert.h = j.at("h").get<int>();
    cert.lambda = j.at("lambda").get<std::int64_t>();
    cert.lhs = j.at("lhs").get<std::int64_t>();
    for (const Json& s : j.at("steps")) {
      const std::string kind = s.at("kind").get<std::string>();
      if (kind == "decompose") {
        DecomposeStep d;
        d.graph6 = s.at("graph").get<std::string>();
        d.triangle = s.at("triangle").get<Triangle>();
        d.chosen = s.at("chosen").get<int>();
        d.factor_hadwiger = s.at("factor_hadwiger").get<std::vector<int>>();
        d.factor_lambdas = s.at("factor_lambdas").get<std::vector<std::int64_t>>();
        d.chain_order = s.at("chain_order").get<std::vector<int>>();
        d.chain_lambdas = s.at("chain_lambdas").get<std::vector<std::int64_t>>();
        d.lambda_before = s.at("lambda_before").get<std::int64_t>();
        d.lambda_after = s.at("lambda_after").get<std::int64_t>();
        cert.steps.emplace_back(std::move(d));
      } else if (kind == "contract") {
        ContractStep c;
        c.graph6 = s.at("graph").get<std::string>();
        const auto edge = s.at("edge").get<std::vector<VertexId>>();
        if (edge.size() != 2) throw CertificateError("contract edge must have two endpoints");
        c.edge = Edge(edge[0], edge[1]);
        c.lambda_before = s.at("lambda_before").get<std::int64_t>();
        c.lambda_after = s.at("lambda_after").get<std::int64_t>();
        c.cycles_before = s.at("cycles_before").get<std::int64_t>();
        c.cycles_after = s.at("cycles_after").get<std::int64_t>();
        c.triangles_through_edge = s.at("triangles_through_edge").get<std::int64_t>();
        c.edges_removed = s.at("edges_removed").get<std::int64_t>();
        c.image_size = s.at("image_size").get<std::int64_t>();
        c.h_before = s.at("h_before").get<int>();
        c.h_after = s.at("h_after").get<int>();
        cert.steps.emplace_back(std::move(c));
      } else if (kind == "base") {
        BaseStep b;
        b.graph6 = s.at("graph").get<std::string>();
        b.order = s.at("order").get<int>();
        b.lambda = s.at("lambda").get<std::int64_t>();
        cert.steps.emplace_back(std::move(b));
      } else {
        throw CertificateError("unknown step kind '" + kind + "'");
      }
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

inline Json psi_table_to_json(const Graph& g, const PsiTable& t) {
  Json j;
  j["graph"] = write_graph6(g);
  j["edge"] = {t.edge.u, t.edge.v};
  j["merged_vertex"] = t.map.merged;
  j["vertex_map"] = t.map.vertex_map;
  j["entries"] = Json::array();
  for (const PsiEntry& e : t.entries) {
    Json row;
    row["source"] = cycle_to_json(e.source);
    row["image"] = cycle_to_json(e.image);
    row["rule"] = to_string(e.rule);
    j["entries"].push_back(std::move(row));
  }
  j["image_size"] = t.image_size();
  return j;
}

inline Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["triangle"] = d.triangle;
  j["factors"] = Json::array();
  for (const DecompositionFactor& f : d.factors) {
    Json row;
    row["graph"] = write_graph6(f.graph);
    row["vertices"] = f.to_parent;
    j["factors"].push_back(std::move(row));
  }
  return j;
}

}  // namespace lambda_lab
