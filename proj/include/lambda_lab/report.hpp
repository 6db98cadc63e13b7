#pragma once

// Per-graph analysis records, sweep summaries, and their JSON/CSV forms.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lambda_lab/certificate_json.hpp"
#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/generators.hpp"
#include "lambda_lab/graph6.hpp"
#include "lambda_lab/theorem.hpp"

namespace lambda_lab {

inline constexpr int kDefaultHadwigerCap = 16;

namespace verdict {
inline constexpr const char* ok = "ok";
inline constexpr const char* violation = "violation";
inline constexpr const char* not_3_connected = "skipped-not-3-connected";
inline constexpr const char* too_large = "skipped-too-large";
}  // namespace verdict

// LAMBDA_LAB_MAX_N, clamped to [1, 64]; 16 when unset or unparsable.
inline int hadwiger_cap_from_env() {
  const char* raw = std::getenv("LAMBDA_LAB_MAX_N");
  if (raw == nullptr) return kDefaultHadwigerCap;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultHadwigerCap;
  return static_cast<int>(std::clamp<long>(v, 1, kMaxVertices));
}

struct AnalyzeOptions {
  bool certify = false;
  int hadwiger_cap = kDefaultHadwigerCap;
};

struct GraphRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::optional<int> h;
  std::optional<std::int64_t> cycles;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> lhs;
  std::string verdict;
  std::optional<Json> certificate;
  std::optional<std::string> certificate_path;
  std::optional<std::string> error;

  bool checked() const { return verdict == verdict::ok || verdict == verdict::violation; }
};

inline GraphRecord analyze_graph(const Graph& g, const AnalyzeOptions& opts = {}) {
  GraphRecord r;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  if (g.order() < 1 || !is_3_connected(g)) {
    r.verdict = verdict::not_3_connected;
    return r;
  }
  if (g.order() > opts.hadwiger_cap) {
    r.verdict = verdict::too_large;
    return r;
  }
  const MainInequality mi = check_main_inequality(g);
  r.h = mi.h;
  r.cycles = mi.characteristic.cycle_count;
  r.lambda = mi.lambda;
  r.lhs = mi.lhs;
  r.verdict = mi.holds ? verdict::ok : verdict::violation;
  if (opts.certify) {
    try {
      r.certificate = certificate_to_json(certify(g));
    } catch (const TheoremViolation& e) {
      r.verdict = verdict::violation;
      r.error = e.what();
    }
  }
  return r;
}

struct ReportSummary {
  std::int64_t count = 0;
  std::int64_t verified = 0;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;
  std::int64_t tight = 0;
  std::optional<std::int64_t> min_slack;
  std::optional<std::int64_t> max_slack;

  void add(const GraphRecord& r) {
    ++count;
    if (!r.checked()) {
      ++skipped;
      return;
    }
    if (r.verdict == verdict::ok) ++verified;
    else ++violations;
    if (r.lambda && r.lhs) note_slack(*r.lambda - *r.lhs);
  }

  void merge(const ReportSummary& o) {
    count += o.count;
    verified += o.verified;
    violations += o.violations;
    skipped += o.skipped;
    tight += o.tight;
    if (o.min_slack) min_slack = min_slack ? std::min(*min_slack, *o.min_slack) : *o.min_slack;
    if (o.max_slack) max_slack = max_slack ? std::max(*max_slack, *o.max_slack) : *o.max_slack;
  }

private:
  void note_slack(std::int64_t slack) {
    if (slack == 0) ++tight;
    min_slack = min_slack ? std::min(*min_slack, slack) : slack;
    max_slack = max_slack ? std::max(*max_slack, slack) : slack;
  }
};

struct Report {
  std::vector<GraphRecord> records;
  ReportSummary summary;
  Json meta = Json::object();
  bool include_records = true;
};

inline void sort_records(std::vector<GraphRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const GraphRecord& a, const GraphRecord& b) { return a.graph6 < b.graph6; });
}

// Sorts records by graph6 (stable, so duplicates keep input order) and
// tallies the summary.
inline Report build_report(std::vector<GraphRecord> records) {
  sort_records(records);
  Report rep;
  for (const GraphRecord& r : records) rep.summary.add(r);
  rep.records = std::move(records);
  return rep;
}

inline Json record_to_json(const GraphRecord& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["h"] = r.h ? Json(*r.h) : Json(nullptr);
  j["cycles"] = r.cycles ? Json(*r.cycles) : Json(nullptr);
  j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  j["lhs"] = r.lhs ? Json(*r.lhs) : Json(nullptr);
  j["verdict"] = r.verdict;
  if (r.error) j["error"] = *r.error;
  if (r.certificate_path) j["certificate_path"] = *r.certificate_path;
  if (r.certificate) j["certificate"] = *r.certificate;
  return j;
}

inline Json report_to_json(const Report& rep) {
  Json j;
  if (rep.include_records) {
    j["records"] = Json::array();
    for (const GraphRecord& r : rep.records) j["records"].push_back(record_to_json(r));
  }
  const ReportSummary& s = rep.summary;
  Json sum;
  sum["count"] = s.count;
  sum["verified"] = s.verified;
  sum["violations"] = s.violations;
  sum["skipped"] = s.skipped;
  sum["tight"] = s.tight;
  sum["min_slack"] = s.min_slack ? Json(*s.min_slack) : Json(nullptr);
  sum["max_slack"] = s.max_slack ? Json(*s.max_slack) : Json(nullptr);
  j["summary"] = std::move(sum);
  j["meta"] = rep.meta;
  return j;
}

inline std::string report_to_csv(const Report& rep) {
  std::ostringstream out;
  out << "graph6,n,m,h,cycles,lambda,lhs,verdict\n";
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  for (const GraphRecord& r : rep.records) {
    // graph6 bytes lie in 63..126, so no quoting is needed.
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << opt(r.h) << ',' << opt(r.cycles) << ','
        << opt(r.lambda) << ',' << opt(r.lhs) << ',' << r.verdict << '\n';
  }
  return out.str();
}

// Applies fn to every item on up to `threads` workers; out[i] = fn(items[i]).
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned threads = 0) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Analyzes the labeled catalog on n vertices in parallel chunks of edge-set
// codes without holding the whole catalog. Every record enters the summary;
// only those with keep(record) true are stored.
template <typename Keep>
Report catalog_report(int n, const AnalyzeOptions& opts, Keep keep, unsigned threads = 0) {
  const std::uint64_t total = CatalogStream::code_count(n);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 4096);
  std::vector<std::uint64_t> starts;
  for (std::uint64_t i = 0; i < chunks; ++i) starts.push_back(total / chunks * i);
  starts.push_back(total);

  struct Part {
    ReportSummary summary;
    std::vector<GraphRecord> kept;
  };
  std::vector<std::size_t> index(chunks);
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::vector<Part> parts = parallel_map(
      index,
      [&](std::size_t i) {
        Part part;
        CatalogStream stream(n, starts[i], starts[i + 1]);
        while (std::optional<Graph> g = stream.next()) {
          GraphRecord r = analyze_graph(*g, opts);
          part.summary.add(r);
          if (keep(r)) part.kept.push_back(std::move(r));
        }
        return part;
      },
      threads);

  Report rep;
  for (Part& p : parts) {
    rep.summary.merge(p.summary);
    std::move(p.kept.begin(), p.kept.end(), std::back_inserter(rep.records));
  }
  sort_records(rep.records);
  return rep;
}

}  // namespace lambda_lab
