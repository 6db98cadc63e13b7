#include <gtest/gtest.h>

#include <random>

#include "lambda_lab/certificate_json.hpp"
#include "lambda_lab/generators.hpp"
#include "lambda_lab/theorem.hpp"
#include "oracles.hpp"

using namespace lambda_lab;

namespace {

Graph family(Family f, std::vector<int> params = {}) { return make_family({f, std::move(params)}); }

std::vector<std::string> step_kinds(const Certificate& c) {
  std::vector<std::string> out;
  for (const CertificateStep& s : c.steps)
    out.push_back(std::visit(
        [](const auto& step) -> std::string {
          using S = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<S, DecomposeStep>) return "decompose";
          else if constexpr (std::is_same_v<S, ContractStep>) return "contract";
          else return "base";
        },
        s));
  return out;
}

}  // namespace

TEST(Lhs, Values) {
  EXPECT_EQ(lhs(1).value, 1);
  EXPECT_EQ(lhs(2).value, 1);
  EXPECT_EQ(lhs(3).value, 1);
  EXPECT_EQ(lhs(4).value, 2);
  EXPECT_EQ(lhs(6).value, 11);
  EXPECT_THROW(lhs(0), PreconditionError);
  for (int h = 3; h < 40; ++h) EXPECT_LT(lhs(h).value, lhs(h + 1).value);
}

TEST(Lhs, EqualsLambdaOfCompleteGraphs) {
  for (int h = 3; h <= 8; ++h) {
    const Graph k = family(Family::complete, {h});
    EXPECT_EQ(characteristic(k).lambda, lhs(h).value);
    EXPECT_EQ(static_cast<int>(oracle::nonseparating_cycle_sets(oracle::to_matrix(k)).size()) - k.size() + h,
              lhs(h).value);
  }
}

TEST(MainInequality, Examples) {
  const MainInequality k5e = check_main_inequality(family(Family::complete_minus_edge, {5}));
  EXPECT_TRUE(k5e.holds);
  EXPECT_EQ(k5e.h, 4);
  EXPECT_EQ(k5e.lambda, 2);
  EXPECT_EQ(k5e.slack(), 0);

  const MainInequality cube = check_main_inequality(family(Family::cube));
  EXPECT_TRUE(cube.holds);
  EXPECT_EQ(cube.lambda, 2);
  EXPECT_EQ(cube.lhs, 2);

  const MainInequality k7 = check_main_inequality(family(Family::complete, {7}));
  EXPECT_EQ(k7.lambda, 21);
  EXPECT_EQ(k7.lhs, 21);

  std::vector<Edge> c5;
  for (VertexId i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
  EXPECT_THROW(check_main_inequality(Graph(5, c5)), PreconditionError);
}

TEST(MainInequality, MatchesOracleValues) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 5 + trial % 3;
    const Graph g = random_3_connected(n, std::min((3 * n + 1) / 2 + trial % 6, n * (n - 1) / 2), rng());
    const MainInequality mi = check_main_inequality(g);
    const oracle::Matrix m = oracle::to_matrix(g);
    const int h = oracle::hadwiger(m);
    const auto lambda = static_cast<std::int64_t>(oracle::nonseparating_cycle_sets(m).size()) - g.size() + n;
    ASSERT_EQ(mi.h, h);
    ASSERT_EQ(mi.lambda, lambda);
    ASSERT_EQ(mi.lhs, static_cast<std::int64_t>(h) * (h - 1) * (h - 2) / 6 - h * (h - 1) / 2 + h);
    ASSERT_TRUE(mi.holds) << write_graph6(g);
  }
}

TEST(Certify, CompleteGraphIsItsOwnBase) {
  const Certificate c = certify(family(Family::complete, {4}));
  EXPECT_EQ(step_kinds(c), std::vector<std::string>{"base"});
  EXPECT_EQ(c.h, 4);
  EXPECT_EQ(c.lambda, 2);
  EXPECT_TRUE(verify_certificate(family(Family::complete, {4}), c));
}

TEST(Certify, SeparatingTriangleIsDecomposedFirst) {
  const Graph g = family(Family::complete_minus_edge, {5});
  const Certificate c = certify(g);
  EXPECT_EQ(step_kinds(c), (std::vector<std::string>{"decompose", "base"}));
  const auto& d = std::get<DecomposeStep>(c.steps[0]);
  EXPECT_EQ(d.triangle, (Triangle{2, 3, 4}));
  EXPECT_EQ(d.factor_hadwiger, (std::vector<int>{4, 4}));
  EXPECT_EQ(d.lambda_before, 2);
  EXPECT_EQ(d.lambda_after, 2);
  EXPECT_TRUE(verify_certificate(g, c));
}

TEST(Certify, PrismContractsTwiceToKFour) {
  const Graph g = family(Family::prism);
  const Certificate c = certify(g);
  EXPECT_EQ(step_kinds(c), (std::vector<std::string>{"contract", "contract", "base"}));
  const auto& first = std::get<ContractStep>(c.steps[0]);
  EXPECT_EQ(first.edge, Edge(0, 3));
  EXPECT_EQ(first.triangles_through_edge, 0);
  EXPECT_EQ(first.edges_removed, 1);
  EXPECT_EQ(std::get<BaseStep>(c.steps.back()).order, 4);
  EXPECT_TRUE(verify_certificate(g, c));
}

TEST(Certify, ChainsOfCliques) {
  for (int r = 2; r <= 4; ++r) {
    const Graph g = family(Family::clique_sum_chain, {5, r});
    const Certificate c = certify(g);
    // All pieces share one triangle, which stops counting once it separates,
    // so each K_5 contributes 4.
    const auto cycles = static_cast<std::int64_t>(oracle::nonseparating_cycle_sets(oracle::to_matrix(g)).size());
    EXPECT_EQ(c.h, 5);
    EXPECT_EQ(c.lhs, 5);
    EXPECT_EQ(c.lambda, cycles - g.size() + g.order());
    EXPECT_EQ(c.lambda, 4 * r);
    EXPECT_TRUE(verify_certificate(g, c));
  }
}

TEST(Certify, RandomGraphsProduceValidCertificates) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 4;
    const Graph g = random_3_connected(n, std::min((3 * n + 1) / 2 + trial % 7, n * (n - 1) / 2), rng());
    const Certificate c = certify(g);
    ASSERT_TRUE(verify_certificate(g, c)) << write_graph6(g);
    ASSERT_LE(c.lhs, c.lambda);
  }
}

TEST(VerifyCertificate, RejectsTampering) {
  const Graph g = family(Family::prism);
  const Certificate good = certify(g);

  Certificate bad_lambda = good;
  bad_lambda.lambda += 1;
  EXPECT_FALSE(verify_certificate(g, bad_lambda));

  Certificate bad_base = good;
  std::get<BaseStep>(bad_base.steps.back()).order = 5;
  EXPECT_FALSE(verify_certificate(g, bad_base));

  Certificate bad_edge = good;
  std::get<ContractStep>(bad_edge.steps[0]).edge = Edge(0, 1);
  EXPECT_FALSE(verify_certificate(g, bad_edge));

  Certificate bad_count = good;
  std::get<ContractStep>(bad_count.steps[1]).image_size += 1;
  EXPECT_FALSE(verify_certificate(g, bad_count));

  EXPECT_FALSE(verify_certificate(family(Family::cube), good));
}

TEST(VerifyCertificate, StructuralErrors) {
  const Graph g = family(Family::prism);
  Certificate c = certify(g);
  Certificate no_base = c;
  no_base.steps.pop_back();
  EXPECT_THROW(verify_certificate(g, no_base), CertificateError);
  Certificate empty = c;
  empty.steps.clear();
  EXPECT_THROW(verify_certificate(g, empty), CertificateError);
}

TEST(CertificateJson, RoundTrip) {
  for (const Graph& g : {family(Family::prism), family(Family::complete_minus_edge, {5}),
                         family(Family::clique_sum_chain, {4, 3}), family(Family::wheel, {7})}) {
    const Certificate c = certify(g);
    const Json j = certificate_to_json(c);
    const Certificate back = certificate_from_json(Json::parse(j.dump()));
    EXPECT_EQ(certificate_to_json(back), j);
    EXPECT_TRUE(verify_certificate(g, back));
  }
}

TEST(CertificateJson, MalformedInput) {
  Json j = certificate_to_json(certify(family(Family::complete, {4})));
  Json unknown = j;
  unknown["steps"][0]["kind"] = "teleport";
  EXPECT_THROW(certificate_from_json(unknown), CertificateError);
  Json missing = j;
  missing.erase("h");
  EXPECT_THROW(certificate_from_json(missing), CertificateError);
  EXPECT_THROW(certificate_from_json(Json::parse("[1,2]")), CertificateError);
}

TEST(OverDominating, Examples) {
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::vector<VertexId>> singletons;
    for (VertexId v = 0; v < n; ++v) singletons.push_back({v});
    EXPECT_TRUE(is_over_dominating(family(Family::complete, {n}), Colouring(singletons)).over_dominating);
  }

  std::vector<Edge> c5;
  for (VertexId i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
  const OverDomination r = is_over_dominating(Graph(5, c5), Colouring({{0, 2}, {1, 4}, {3}}));
  EXPECT_FALSE(r.over_dominating);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().kind, DominationViolation::Kind::vertex_misses_class);

  EXPECT_TRUE(is_over_dominating(family(Family::complete_bipartite, {3, 3}), Colouring({{0, 1, 2}, {3, 4, 5}}))
                  .over_dominating);
}

TEST(OverDominating, BadColouringsAreErrors) {
  const Graph k4 = family(Family::complete, {4});
  EXPECT_THROW(is_over_dominating(k4, Colouring({{0, 1}, {2}, {3}})), PreconditionError);  // improper
  EXPECT_THROW(is_over_dominating(k4, Colouring({{0}, {1}, {2}})), PreconditionError);     // 3 uncovered
  EXPECT_THROW(is_over_dominating(k4, Colouring({{0}, {1}, {2}, {3}, {3}})), PreconditionError);
  EXPECT_THROW(Colouring({{0, 0}}), PreconditionError);
  EXPECT_THROW(Colouring(std::vector<std::vector<VertexId>>{{}}), PreconditionError);
}

TEST(Corollary, Examples) {
  const CorollaryCheck k6 = check_corollary(family(Family::complete, {6}), Colouring({{0}, {1}, {2}, {3}, {4}, {5}}));
  EXPECT_EQ(k6.q, 4);
  EXPECT_EQ(k6.bound, Rational::of(14, 1));
  EXPECT_EQ(k6.cycle_count, 20);
  EXPECT_TRUE(k6.holds);

  const CorollaryCheck k4 = check_corollary(family(Family::complete, {4}), Colouring({{0}, {1}, {2}, {3}}));
  EXPECT_EQ(k4.bound, Rational::of(3, 1));
  EXPECT_TRUE(k4.holds);

  const CorollaryCheck k5e =
      check_corollary(family(Family::complete_minus_edge, {5}), Colouring({{0, 1}, {2}, {3}, {4}}));
  EXPECT_EQ(k5e.bound, Rational::of(5, 1));
  EXPECT_TRUE(k5e.holds);

  const CorollaryCheck k33 =
      check_corollary(family(Family::complete_bipartite, {3, 3}), Colouring({{0, 1, 2}, {3, 4, 5}}));
  EXPECT_EQ(k33.q, 1);
  EXPECT_TRUE(k33.holds);
}

TEST(Corollary, RequiresOverDomination) {
  // The bipartition of the cube: no vertex sees a whole class of four.
  EXPECT_THROW(check_corollary(family(Family::cube), Colouring({{0, 3, 5, 6}, {1, 2, 4, 7}})), PreconditionError);
}

TEST(Corollary, BoundIsExactInSixths) {
  // K_7 with singleton classes: q = 4, bound = 21 - 7 + 64/6 - 8 + 4/3 + 1.
  const CorollaryCheck r =
      check_corollary(family(Family::complete, {7}), Colouring({{0}, {1}, {2}, {3}, {4}, {5}, {6}}));
  EXPECT_EQ(r.bound, Rational::of(6 * 21 - 6 * 7 + 64 - 48 + 8 + 6, 6));
  EXPECT_TRUE(r.holds);
}
