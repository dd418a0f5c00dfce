#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ctrlset/bench.hpp"
#include "ctrlset/control.hpp"
#include "ctrlset/generators.hpp"
#include "ctrlset/graph.hpp"
#include "ctrlset/io.hpp"
#include "ctrlset/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

// Exit codes: 0 success, 1 usage, 2 data error, 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

struct AnalyzeArgs {
  std::string file;
  std::string method = "new";
  std::string format = "json";
  std::string out;
};

struct GenerateArgs {
  std::string model;
  std::int64_t n = 0;
  double k = 0.0;
  double gamma = 3.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct BenchArgs {
  std::string input;
  std::string model = "sf";
  std::int64_t n = 0;
  double k = 0.0;
  double gamma = 3.0;
  std::uint64_t seed = 0;
  int trials = 3;
  bool csv = false;
};

struct VerifyArgs {
  std::int64_t n_max = 10;
  int trials = 1000;
  std::uint64_t seed = 42;
  bool inject_fault = false;
};

ctrlset::ParsedGraph load_graph(const std::string& path, std::string* digest) {
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ctrlset::ParseError("cannot open input file: " + path);
    *digest = ctrlset::digest_stream(in);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ctrlset::ParseError("cannot open input file: " + path);
  return ctrlset::parse_edge_list(in);
}

ctrlset::GenSpec make_spec(const std::string& model, std::int64_t n, double k, double gamma,
                           std::uint64_t seed) {
  ctrlset::GenSpec spec;
  spec.model = model == "er" ? ctrlset::GraphModel::er : ctrlset::GraphModel::scale_free;
  spec.n = static_cast<ctrlset::NodeId>(n);
  spec.k_avg = k;
  spec.gamma_in = gamma;
  spec.gamma_out = gamma;
  spec.seed = seed;
  return spec;
}

int run_analyze(const AnalyzeArgs& args) {
  std::string digest;
  const ctrlset::ParsedGraph pg = load_graph(args.file, &digest);

  const auto t0 = Clock::now();
  ctrlset::ControlReport report;
  if (args.method == "new")
    report = ctrlset::all_input(pg.graph);
  else if (args.method == "baseline")
    report = ctrlset::baseline_all_input(pg.graph);
  else
    report = ctrlset::oracle_possible_inputs(pg.graph);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  const auto doc = ctrlset::make_report_document(report, pg.labels, elapsed_ms, digest);
  const auto format = args.format == "csv" ? ctrlset::ReportFormat::csv : ctrlset::ReportFormat::json;
  const std::string text = ctrlset::write_report(doc, format);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw ctrlset::ParseError("cannot open output file: " + args.out);
    out << text;
  }
  return kExitOk;
}

int run_generate(const GenerateArgs& args) {
  const ctrlset::DirectedGraph g =
      ctrlset::generate(make_spec(args.model, args.n, args.k, args.gamma, args.seed));
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw ctrlset::ParseError("cannot open output file: " + args.out);
  ctrlset::write_edge_list(g, out);
  const ctrlset::DegreeStats stats = ctrlset::degree_stats(g);
  std::cout << "generated " << args.model << " graph: n=" << g.node_count()
            << " l=" << g.edge_count() << " avg_degree=" << stats.avg_degree << " -> " << args.out
            << '\n';
  return kExitOk;
}

int run_bench(const BenchArgs& args, const std::string& instance) {
  ctrlset::DirectedGraph g;
  if (!args.input.empty()) {
    std::string digest;
    g = load_graph(args.input, &digest).graph;
  } else {
    g = ctrlset::generate(make_spec(args.model, args.n, args.k, args.gamma, args.seed));
  }
  ctrlset::BenchResult res = ctrlset::run_benchmark(g, args.trials);
  res.instance = instance;
  char line[512];
  if (args.csv) {
    std::snprintf(line, sizeof(line), "instance,n,l,n_pd,t_new_s,t_old_s,speedup,trials\n");
    std::cout << line;
    std::snprintf(line, sizeof(line), "%s,%d,%lld,%.6f,%.6f,%.6f,%.2f,%d\n", res.instance.c_str(),
                  res.n, static_cast<long long>(res.l), res.n_pd, res.t_new_s, res.t_old_s,
                  res.speedup, res.trials);
    std::cout << line;
  } else {
    std::snprintf(line, sizeof(line),
                  "%s\nn=%d l=%lld n_pd=%.6f\nt_new=%.6fs t_old=%.6fs speedup=%.2f trials=%d\n",
                  res.instance.c_str(), res.n, static_cast<long long>(res.l), res.n_pd,
                  res.t_new_s, res.t_old_s, res.speedup, res.trials);
    std::cout << line;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  ctrlset::SweepOptions opts;
  opts.n_max = static_cast<ctrlset::NodeId>(args.n_max);
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.inject_fault = args.inject_fault;
  const ctrlset::SweepResult res = ctrlset::verify_sweep(opts, &std::cerr);
  std::cout << "verify: " << res.passed << " passed, " << res.failed << " failed (n_max="
            << args.n_max << ", trials=" << args.trials << ", seed=" << args.seed << ")\n";
  return res.failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctrlset: maximum matching, minimum input sets, and all possible input nodes of directed networks"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze an edge-list file");
  analyze->add_option("file", aa.file, "SNAP-style edge list")->required();
  analyze->add_option("--method", aa.method, "Analysis method")
      ->check(CLI::IsMember({"new", "baseline", "oracle"}));
  analyze->add_option("--format", aa.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", aa.out, "Write the report here instead of stdout");

  GenerateArgs ga;
  CLI::App* generate = app.add_subcommand("generate", "Generate a random graph");
  generate->add_option("--model", ga.model, "Graph model")
      ->required()
      ->check(CLI::IsMember({"er", "sf"}));
  generate->add_option("--n", ga.n, "Node count")->required()->check(CLI::PositiveNumber);
  generate->add_option("--k", ga.k, "Average degree 2L/n")->required();
  generate->add_option("--gamma", ga.gamma, "Power-law exponent (sf only)");
  generate->add_option("--seed", ga.seed, "PRNG seed")->required();
  generate->add_option("--out", ga.out, "Output edge-list path")->required();

  BenchArgs ba;
  CLI::App* bench = app.add_subcommand("bench", "Time the new method against the baseline");
  bench->add_option("--input", ba.input, "Edge-list file to benchmark");
  bench->add_option("--model", ba.model, "Graph model")->check(CLI::IsMember({"er", "sf"}));
  bench->add_option("--n", ba.n, "Node count")->check(CLI::PositiveNumber);
  bench->add_option("--k", ba.k, "Average degree");
  bench->add_option("--gamma", ba.gamma, "Power-law exponent (sf only)");
  bench->add_option("--seed", ba.seed, "PRNG seed");
  bench->add_option("--trials", ba.trials, "Timed trials per method")->check(CLI::PositiveNumber);
  bench->add_flag("--csv", ba.csv, "Emit one CSV header + data row");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Differential sweep against the exhaustive oracle");
  verify->add_option("--n-max", va.n_max, "Largest node count")->check(CLI::Range(1, 12));
  verify->add_option("--trials", va.trials, "Random graphs to check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "PRNG seed");
  verify->add_flag("--inject-fault", va.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(aa);
    if (*generate) return run_generate(ga);
    if (*bench) {
      if (ba.input.empty() && ba.n == 0) {
        std::cerr << "bench needs --input or a full --model/--n/--k/--seed spec\n";
        return kExitUsage;
      }
      const std::string instance =
          !ba.input.empty() ? ba.input
                            : ba.model + " n=" + std::to_string(ba.n) + " k=" + std::to_string(ba.k) +
                                  " seed=" + std::to_string(ba.seed);
      return run_bench(ba, instance);
    }
    if (*verify) return run_verify(va);
  } catch (const ctrlset::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
