// lambda_lab: compute the graph characteristic, Hadwiger numbers and proof
// certificates for graph6 input, and sweep graph catalogs for violations.
//
// Exit codes: 0 all checked graphs satisfy the inequality, 1 a violation was
// found (a counterexample file is written first), 2 bad input or usage.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lambda_lab/lambda_lab.hpp"

namespace fs = std::filesystem;
using namespace lambda_lab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<Graph> read_graphs(const std::string& path) {
  try {
    if (path == "-") return read_graph6_lines(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_graph6_lines(in);
  } catch (const Graph6Error& e) {
    throw InputError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph read_single_graph(const std::string& path) {
  std::vector<Graph> graphs = read_graphs(path);
  if (graphs.size() != 1) throw InputError(path + ": expected exactly one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "csv") return report_to_csv(rep);
  return report_to_json(rep).dump(2) + "\n";
}

struct RunOptions {
  bool certify = false;
  std::string format = "json";
  std::string out;
  std::string cert_dir;
  std::string counterexample = "counterexample.g6";
  bool summary_only = false;
  bool timestamps = false;
  unsigned threads = 0;
};

AnalyzeOptions analyze_options(const RunOptions& opt) {
  AnalyzeOptions aopt;
  aopt.certify = opt.certify || !opt.cert_dir.empty();
  aopt.hadwiger_cap = hadwiger_cap_from_env();
  return aopt;
}

// Writes certificates, the counterexample file and the report, and turns the
// outcome into an exit code.
int finish_report(Report rep, const RunOptions& opt, Json meta, std::chrono::steady_clock::time_point start) {
  rep.include_records = !opt.summary_only;

  if (!opt.cert_dir.empty()) {
    fs::create_directories(opt.cert_dir);
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      GraphRecord& r = rep.records[i];
      if (!r.certificate) continue;
      std::ostringstream name;
      name << "cert_" << std::setw(6) << std::setfill('0') << i << ".json";
      const fs::path path = fs::path(opt.cert_dir) / name.str();
      std::ofstream(path) << r.certificate->dump(2) << "\n";
      r.certificate_path = path.string();
      if (!opt.certify) r.certificate.reset();
    }
  }

  if (opt.timestamps) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    meta["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    meta["finished_at_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
  }
  rep.meta = std::move(meta);

  if (rep.summary.violations > 0) {
    std::ofstream cx(opt.counterexample);
    for (const GraphRecord& r : rep.records)
      if (r.verdict == verdict::violation) cx << r.graph6 << "\n";
    std::cerr << "violation: " << rep.summary.violations << " counterexample(s) written to " << opt.counterexample
              << "\n";
  }
  emit(render(rep, opt.format), opt.out);
  return rep.summary.violations > 0 ? kExitViolation : kExitOk;
}

int run_report(const std::vector<Graph>& graphs, const RunOptions& opt, Json meta) {
  const auto start = std::chrono::steady_clock::now();
  const AnalyzeOptions aopt = analyze_options(opt);
  Report rep = build_report(parallel_map(graphs, [&](const Graph& g) { return analyze_graph(g, aopt); }, opt.threads));
  return finish_report(std::move(rep), opt, std::move(meta), start);
}

// Streams the catalog; with --summary-only only violating records are kept.
int run_catalog(int n, const RunOptions& opt, Json meta) {
  const auto start = std::chrono::steady_clock::now();
  const bool keep_all = !opt.summary_only;
  Report rep = catalog_report(
      n, analyze_options(opt), [&](const GraphRecord& r) { return keep_all || r.verdict == verdict::violation; },
      opt.threads);
  return finish_report(std::move(rep), opt, std::move(meta), start);
}

void add_run_options(CLI::App* cmd, RunOptions& opt) {
  cmd->add_flag("--certify", opt.certify, "Attach a proof certificate to every checked graph");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out, "Write the report here instead of stdout");
  cmd->add_option("--cert-dir", opt.cert_dir, "Write certificates as separate files into this directory");
  cmd->add_option("--counterexample", opt.counterexample, "Where to write violating graphs (graph6)");
  cmd->add_flag("--summary-only", opt.summary_only, "Omit per-graph records from the report");
  cmd->add_flag("--timestamps", opt.timestamps, "Add runtime and wall-clock fields to the meta section");
  cmd->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph characteristic, Hadwiger number and certificate tool"};
  app.require_subcommand(1);

  RunOptions analyze_opt;
  std::string analyze_input = "-";
  auto* analyze = app.add_subcommand("analyze", "Compute h, C(G), Lambda and the verdict for each graph6 line");
  analyze->add_option("input", analyze_input, "graph6 file, or - for stdin");
  add_run_options(analyze, analyze_opt);

  RunOptions sweep_opt;
  int exhaustive_n = 0;
  std::vector<std::uint64_t> random_args;
  std::string sweep_file;
  bool allow_long = false;
  auto* sweep = app.add_subcommand("sweep", "Check the inequality over a catalog, a random family or a file");
  auto* ex_opt = sweep->add_option("--exhaustive", exhaustive_n, "Every labeled 3-connected graph on N vertices");
  auto* rnd_opt = sweep->add_option("--random", random_args, "N M COUNT SEED")->expected(4);
  auto* file_opt = sweep->add_option("--file", sweep_file, "graph6 file");
  ex_opt->excludes(rnd_opt)->excludes(file_opt);
  rnd_opt->excludes(file_opt);
  sweep->add_flag("--long", allow_long, "Allow the long-running N = 8 catalog");
  add_run_options(sweep, sweep_opt);

  int catalog_n = 0;
  std::string catalog_out;
  bool catalog_long = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Write every labeled 3-connected graph on N vertices as graph6");
  catalog_cmd->add_option("n", catalog_n, "N")->required();
  catalog_cmd->add_option("--out", catalog_out, "Output path");
  catalog_cmd->add_flag("--long", catalog_long, "Allow N = 8");

  std::string certify_input;
  std::string certify_out;
  auto* certify_cmd = app.add_subcommand("certify", "Emit a proof certificate for each graph");
  certify_cmd->add_option("input", certify_input, "graph6 file, or -")->required();
  certify_cmd->add_option("--out", certify_out, "Output path");

  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "Replay certificates (a JSON object or array) from scratch");
  verify_cmd->add_option("certificate", verify_input, "certificate JSON file, or -")->required();

  std::string psi_input;
  std::vector<int> psi_edge;
  auto* psi_cmd = app.add_subcommand("psi", "Print the lifting table C(G/e) -> C(G) for an edge");
  psi_cmd->add_option("input", psi_input, "graph6 file holding one graph, or -")->required();
  psi_cmd->add_option("--edge", psi_edge, "U V")->expected(2)->required();

  std::string decompose_input;
  auto* decompose_cmd = app.add_subcommand("decompose", "List separating triangles and decompose at each");
  decompose_cmd->add_option("input", decompose_input, "graph6 file, or -")->required();

  std::string hadwiger_input;
  auto* hadwiger_cmd = app.add_subcommand("hadwiger", "Hadwiger number with a witness model");
  hadwiger_cmd->add_option("input", hadwiger_input, "graph6 file, or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      Json meta;
      meta["command"] = "analyze";
      meta["input"] = analyze_input;
      meta["hadwiger_cap"] = hadwiger_cap_from_env();
      return run_report(read_graphs(analyze_input), analyze_opt, std::move(meta));
    }

    if (*sweep) {
      Json meta;
      meta["command"] = "sweep";
      meta["hadwiger_cap"] = hadwiger_cap_from_env();
      std::vector<Graph> graphs;
      if (*ex_opt) {
        if (exhaustive_n == kCatalogMax && !allow_long)
          throw InputError("--exhaustive 8 enumerates 2^28 edge sets; pass --long to run it");
        if (exhaustive_n < kCatalogMin || exhaustive_n > kCatalogMax)
          throw InputError("--exhaustive takes N in [4, 8]");
        meta["mode"] = "exhaustive";
        meta["n"] = exhaustive_n;
        return run_catalog(exhaustive_n, sweep_opt, std::move(meta));
      } else if (*rnd_opt) {
        const int n = static_cast<int>(random_args[0]);
        const int m = static_cast<int>(random_args[1]);
        const std::uint64_t count = random_args[2];
        const std::uint64_t seed = random_args[3];
        meta["mode"] = "random";
        meta["n"] = n;
        meta["m"] = m;
        meta["count"] = count;
        meta["seed"] = seed;
        std::mt19937_64 seeds(seed);
        try {
          for (std::uint64_t i = 0; i < count; ++i) graphs.push_back(random_3_connected(n, m, seeds()));
        } catch (const PreconditionError& e) {
          throw InputError(e.what());
        }
      } else if (*file_opt) {
        meta["mode"] = "file";
        meta["input"] = sweep_file;
        graphs = read_graphs(sweep_file);
      } else {
        throw InputError("sweep needs one of --exhaustive, --random or --file");
      }
      return run_report(graphs, sweep_opt, std::move(meta));
    }

    if (*catalog_cmd) {
      if (catalog_n < kCatalogMin || catalog_n > kCatalogMax) throw InputError("catalog takes N in [4, 8]");
      if (catalog_n == kCatalogMax && !catalog_long)
        throw InputError("catalog 8 enumerates 2^28 edge sets; pass --long to run it");
      std::ofstream file;
      if (!catalog_out.empty()) {
        file.open(catalog_out);
        if (!file) throw InputError("cannot write " + catalog_out);
      }
      std::ostream& out = catalog_out.empty() ? std::cout : file;
      for_each_catalog_graph(catalog_n, [&](const Graph& g) { out << write_graph6(g) << "\n"; });
      return kExitOk;
    }

    if (*certify_cmd) {
      Json out = Json::array();
      for (const Graph& g : read_graphs(certify_input)) {
        try {
          out.push_back(certificate_to_json(certify(g)));
        } catch (const PreconditionError& e) {
          Json skipped;
          skipped["graph"] = write_graph6(g);
          skipped["skipped"] = e.what();
          out.push_back(std::move(skipped));
        }
      }
      emit((out.size() == 1 ? out.front() : out).dump(2) + "\n", certify_out);
      return kExitOk;
    }

    if (*verify_cmd) {
      Json doc;
      try {
        if (verify_input == "-") {
          doc = Json::parse(std::cin);
        } else {
          std::ifstream in(verify_input);
          if (!in) throw InputError("cannot open " + verify_input);
          doc = Json::parse(in);
        }
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
      }
      if (!doc.is_array()) doc = Json::array({doc});
      bool all = true;
      for (const Json& item : doc) {
        const Certificate cert = certificate_from_json(item);
        const bool ok = verify_certificate(parse_graph6(cert.graph6), cert);
        std::cout << cert.graph6 << " " << (ok ? "valid" : "INVALID") << "\n";
        all = all && ok;
      }
      return all ? kExitOk : kExitViolation;
    }

    if (*psi_cmd) {
      const Graph g = read_single_graph(psi_input);
      const Edge e(psi_edge[0], psi_edge[1]);
      std::cout << psi_table_to_json(g, psi_injection(g, e)).dump(2) << "\n";
      return kExitOk;
    }

    if (*decompose_cmd) {
      Json out = Json::array();
      for (const Graph& g : read_graphs(decompose_input)) {
        Json row;
        row["graph"] = write_graph6(g);
        row["decompositions"] = Json::array();
        for (const Triangle& t : separating_triangles(g))
          row["decompositions"].push_back(decomposition_to_json(decompose_at_triangle(g, t)));
        out.push_back(std::move(row));
      }
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (*hadwiger_cmd) {
      const int cap = hadwiger_cap_from_env();
      Json out = Json::array();
      for (const Graph& g : read_graphs(hadwiger_input)) {
        Json row;
        row["graph"] = write_graph6(g);
        if (g.order() > cap) {
          row["skipped"] = "more than " + std::to_string(cap) + " vertices (set LAMBDA_LAB_MAX_N)";
        } else {
          const HadwigerResult hr = hadwiger_number(g);
          row["h"] = hr.h;
          row["witness"] = minor_model_to_json(hr.witness);
        }
        out.push_back(std::move(row));
      }
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CertificateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
