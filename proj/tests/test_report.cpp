#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>

#include "lambda_lab/generators.hpp"
#include "lambda_lab/report.hpp"

using namespace lambda_lab;

namespace {

Graph family(Family f, std::vector<int> params = {}) { return make_family({f, std::move(params)}); }

}  // namespace

TEST(AnalyzeGraph, CheckedRecord) {
  const GraphRecord r = analyze_graph(family(Family::complete, {4}));
  EXPECT_EQ(r.graph6, "C~");
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.m, 6);
  EXPECT_EQ(r.h, 4);
  EXPECT_EQ(r.cycles, 4);
  EXPECT_EQ(r.lambda, 2);
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.verdict, verdict::ok);
  EXPECT_FALSE(r.certificate);
}

TEST(AnalyzeGraph, SkippedRecords) {
  std::vector<Edge> c5;
  for (VertexId i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
  const GraphRecord thin = analyze_graph(Graph(5, c5));
  EXPECT_EQ(thin.verdict, verdict::not_3_connected);
  EXPECT_FALSE(thin.h);

  AnalyzeOptions small;
  small.hadwiger_cap = 8;
  EXPECT_EQ(analyze_graph(family(Family::petersen), small).verdict, verdict::too_large);
  EXPECT_EQ(analyze_graph(Graph(0)).verdict, verdict::not_3_connected);
}

TEST(AnalyzeGraph, CertificateOnRequest) {
  AnalyzeOptions opts;
  opts.certify = true;
  const GraphRecord r = analyze_graph(family(Family::prism), opts);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ((*r.certificate)["graph"], "E{Sw");
  EXPECT_TRUE(verify_certificate(family(Family::prism), certificate_from_json(*r.certificate)));
}

TEST(HadwigerCap, ReadsEnvironment) {
  ::unsetenv("LAMBDA_LAB_MAX_N");
  EXPECT_EQ(hadwiger_cap_from_env(), kDefaultHadwigerCap);
  ::setenv("LAMBDA_LAB_MAX_N", "20", 1);
  EXPECT_EQ(hadwiger_cap_from_env(), 20);
  ::setenv("LAMBDA_LAB_MAX_N", "500", 1);
  EXPECT_EQ(hadwiger_cap_from_env(), 64);
  ::setenv("LAMBDA_LAB_MAX_N", "lots", 1);
  EXPECT_EQ(hadwiger_cap_from_env(), kDefaultHadwigerCap);
  ::unsetenv("LAMBDA_LAB_MAX_N");
}

TEST(BuildReport, SortsAndTallies) {
  std::vector<GraphRecord> records;
  for (const Graph& g : {family(Family::prism), family(Family::complete, {4}), family(Family::complete, {6}),
                         Graph(4, {Edge(0, 1)})})
    records.push_back(analyze_graph(g));
  GraphRecord fake = records.front();
  fake.graph6 = "E~~w";
  fake.lambda = 1;
  fake.lhs = 2;
  fake.verdict = verdict::violation;
  records.push_back(fake);

  const Report rep = build_report(records);
  std::vector<std::string> order;
  for (const GraphRecord& r : rep.records) order.push_back(r.graph6);
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
  EXPECT_EQ(rep.summary.count, 5);
  EXPECT_EQ(rep.summary.verified, 3);
  EXPECT_EQ(rep.summary.violations, 1);
  EXPECT_EQ(rep.summary.skipped, 1);
  EXPECT_EQ(rep.summary.tight, 3);  // complete graphs and the prism
  EXPECT_EQ(rep.summary.min_slack, -1);
  EXPECT_EQ(rep.summary.max_slack, 0);
}

TEST(ReportJson, StableLayout) {
  Report rep = build_report({analyze_graph(family(Family::complete, {4}))});
  rep.meta["command"] = "analyze";
  EXPECT_EQ(report_to_json(rep).dump(),
            R"({"records":[{"graph6":"C~","n":4,"m":6,"h":4,"cycles":4,"lambda":2,"lhs":2,"verdict":"ok"}],)"
            R"("summary":{"count":1,"verified":1,"violations":0,"skipped":0,"tight":1,"min_slack":0,"max_slack":0},)"
            R"("meta":{"command":"analyze"}})");
  rep.include_records = false;
  EXPECT_FALSE(report_to_json(rep).contains("records"));
}

TEST(ReportJson, IdenticalAcrossThreadCounts) {
  const std::vector<Graph> graphs = exhaustive_catalog(5);
  auto run = [&](unsigned threads) {
    return report_to_json(build_report(parallel_map(graphs, [](const Graph& g) { return analyze_graph(g); }, threads)))
        .dump();
  };
  EXPECT_EQ(run(1), run(4));
}

TEST(ReportCsv, Layout) {
  std::vector<Edge> c5;
  for (VertexId i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
  const Report rep = build_report({analyze_graph(family(Family::complete, {4})), analyze_graph(Graph(5, c5))});
  EXPECT_EQ(report_to_csv(rep),
            "graph6,n,m,h,cycles,lambda,lhs,verdict\n"
            "C~,4,6,4,4,2,2,ok\n"
            "Dhc,5,5,,,,,skipped-not-3-connected\n");
}

TEST(ParallelMap, PreservesOrderAndPropagatesErrors) {
  std::vector<int> items(1000);
  std::iota(items.begin(), items.end(), 0);
  const std::vector<int> squares = parallel_map(items, [](int x) { return x * x; }, 8);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(squares[i], i * i);
  EXPECT_THROW(parallel_map(
                   items,
                   [](int x) {
                     if (x == 500) throw GraphError("boom");
                     return x;
                   },
                   4),
               GraphError);
}

TEST(CatalogReport, MatchesMaterializedCatalog) {
  const Report streamed = catalog_report(6, {}, [](const GraphRecord&) { return true; }, 3);
  const Report direct = build_report(parallel_map(exhaustive_catalog(6), [](const Graph& g) { return analyze_graph(g); }));
  EXPECT_EQ(report_to_json(streamed).dump(), report_to_json(direct).dump());

  const Report summary_only = catalog_report(6, {}, [](const GraphRecord& r) { return r.verdict == verdict::violation; });
  EXPECT_TRUE(summary_only.records.empty());
  EXPECT_EQ(report_to_json(summary_only)["summary"], report_to_json(direct)["summary"]);
}
