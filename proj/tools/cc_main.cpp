// Benchmark and verification CLI for the hook-compress connected-components
// engines: `cc {run|sweep|verify|gen}`.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O or parse
// error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hookcc/bench.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string input;
  std::string format = "edgelist";
  std::string gen;
  bool header = false;
  std::string algo = "adaptive";
  std::string segments = "auto";
  std::string workers = "max";
  std::uint64_t seed = 1;
  std::uint64_t reps = 1;
  std::string labels_out;
  std::string metrics_out;
  std::string report = "json";
  bool no_verify = false;
  std::string sweep_segments;
};

void add_input_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--input", f.input, "input graph file");
  cmd->add_option("--format", f.format, "edgelist|dimacs|mtx")
      ->check(CLI::IsMember({"edgelist", "dimacs", "mtx"}));
  cmd->add_flag("--header", f.header, "edge-list file starts with `n m`");
  cmd->add_option("--gen", f.gen,
                  "generator spec: grid:RxC | er:n=..,m=..[,seed=..] | "
                  "rmat:scale=..,ef=..[,seed=..]");
  cmd->add_option("--seed", f.seed, "default seed for generator specs");
}

hookcc::RunConfig to_config(const CommonFlags& f) {
  hookcc::RunConfig cfg;
  cfg.input_path = f.input;
  cfg.gen_spec = f.gen;
  cfg.edge_list_header = f.header;
  if (f.format == "edgelist")
    cfg.format = hookcc::InputFormat::EdgeList;
  else if (f.format == "dimacs")
    cfg.format = hookcc::InputFormat::Dimacs;
  else
    cfg.format = hookcc::InputFormat::MatrixMarket;

  if (f.algo == "baseline")
    cfg.algo = hookcc::Algorithm::Baseline;
  else if (f.algo == "baseline-mj")
    cfg.algo = hookcc::Algorithm::BaselineMj;
  else if (f.algo == "atomic")
    cfg.algo = hookcc::Algorithm::Atomic;
  else if (f.algo == "adaptive")
    cfg.algo = hookcc::Algorithm::Adaptive;
  else
    throw hookcc::UsageError("unknown --algo `" + f.algo + "`");

  if (f.segments == "auto")
    cfg.segments = 0;
  else
    cfg.segments = std::stoull(f.segments);
  if (f.segments != "auto" && cfg.segments == 0)
    throw hookcc::UsageError("--segments must be `auto` or a positive integer");

  cfg.workers = f.workers == "max" ? 0 : static_cast<unsigned>(std::stoul(f.workers));
  cfg.seed = f.seed;
  cfg.repetitions = f.reps;
  cfg.verify = !f.no_verify;
  cfg.labels_out = f.labels_out;
  cfg.metrics_out = f.metrics_out;
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw hookcc::IoError("cannot write " + path);
  out << text;
}

void emit(const std::string& text, const std::string& metrics_out) {
  if (metrics_out.empty())
    std::cout << text;
  else
    write_text(metrics_out, text);
}

int cmd_run(const CommonFlags& f) {
  hookcc::RunConfig cfg = to_config(f);
  hookcc::Graph g = hookcc::load_graph(cfg);
  hookcc::check_endpoints(g);
  hookcc::GraphStats stats = hookcc::compute_stats(g);

  hookcc::RunResult result = hookcc::execute_run(cfg, g, stats);

  if (!cfg.labels_out.empty()) {
    std::ostringstream os;
    hookcc::write_labels(result.labels.label, os);
    write_text(cfg.labels_out, os.str());
  }

  std::string text = f.report == "csv"
                         ? hookcc::metrics_to_csv(result.metrics)
                         : hookcc::metrics_to_json(result.metrics).dump(2) + "\n";
  emit(text, cfg.metrics_out);

  if (cfg.verify && !result.verified) {
    std::cerr << "verification FAILED against the sequential oracle\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int cmd_sweep(const CommonFlags& f) {
  hookcc::RunConfig cfg = to_config(f);
  cfg.algo = hookcc::Algorithm::Adaptive;
  hookcc::Graph g = hookcc::load_graph(cfg);
  hookcc::check_endpoints(g);
  hookcc::GraphStats stats = hookcc::compute_stats(g);

  std::vector<std::uint64_t> seglist;
  std::istringstream ss(f.sweep_segments);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) seglist.push_back(std::stoull(tok));

  std::vector<hookcc::SweepRow> rows =
      hookcc::execute_sweep(cfg, g, stats, seglist);

  std::string text = f.report == "csv"
                         ? hookcc::sweep_to_csv(rows)
                         : hookcc::sweep_to_json(rows).dump(2) + "\n";
  emit(text, cfg.metrics_out);

  for (const hookcc::SweepRow& row : rows) {
    if (!row.verified) {
      std::cerr << "verification FAILED at s=" << row.s << "\n";
      return kExitVerifyFailure;
    }
  }
  return kExitOk;
}

int cmd_verify(const CommonFlags& f, const std::string& labels_path) {
  hookcc::RunConfig cfg = to_config(f);
  hookcc::Graph g = hookcc::load_graph(cfg);
  hookcc::check_endpoints(g);

  std::ifstream in(labels_path);
  if (!in) throw hookcc::IoError("cannot open " + labels_path);
  std::vector<hookcc::Vertex> labels = hookcc::read_labels(in);

  hookcc::VerifyResult vr = hookcc::verify_labels(g, labels);
  if (vr.equal) {
    std::cout << "OK: labeling matches the oracle partition\n";
    return kExitOk;
  }
  std::cerr << "MISMATCH at vertex " << vr.witness_v << ": grouped with "
            << vr.actual_rep << ", oracle groups it with " << vr.expected_rep
            << "\n";
  return kExitVerifyFailure;
}

int cmd_gen(const CommonFlags& f, const std::string& output) {
  hookcc::Graph g = hookcc::generate_from_spec(f.gen, f.seed);
  std::ostringstream os;
  hookcc::write_edge_list(g, os);
  if (output.empty() || output == "-")
    std::cout << os.str();
  else
    write_text(output, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hook-compress connected components benchmark harness"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string labels_path;
  std::string gen_output;

  CLI::App* run = app.add_subcommand("run", "run one algorithm and report metrics");
  add_input_flags(run, f);
  run->add_option("--algo", f.algo, "baseline|baseline-mj|atomic|adaptive")
      ->check(CLI::IsMember({"baseline", "baseline-mj", "atomic", "adaptive"}));
  run->add_option("--segments", f.segments, "auto or a positive integer");
  run->add_option("--workers", f.workers, "max or a positive integer");
  run->add_option("--reps", f.reps, "repetitions; min and median are reported");
  run->add_option("--labels-out", f.labels_out, "write the labeling here");
  run->add_option("--metrics-out", f.metrics_out, "write the report here");
  run->add_option("--report", f.report, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--no-verify", f.no_verify, "skip the oracle check");

  CLI::App* sweep = app.add_subcommand("sweep", "segment-count sweep (adaptive)");
  add_input_flags(sweep, f);
  sweep->add_option("--sweep-segments", f.sweep_segments,
                    "comma-separated segment counts (s=1 and auto are always included)");
  sweep->add_option("--workers", f.workers, "max or a positive integer");
  sweep->add_option("--reps", f.reps, "repetitions per row");
  sweep->add_option("--metrics-out", f.metrics_out, "write the table here");
  sweep->add_option("--report", f.report, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "check a labels file against the oracle");
  add_input_flags(verify, f);
  verify->add_option("labels", labels_path, "labels file (`<vertex> <label>` lines)")
      ->required();

  CLI::App* gen = app.add_subcommand("gen", "write a generated graph as edge-list text");
  gen->add_option("spec", f.gen, "generator spec")->required();
  gen->add_option("output", gen_output, "output path (default stdout)");
  gen->add_option("--seed", f.seed, "default seed when the spec has none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(f);
    if (sweep->parsed()) return cmd_sweep(f);
    if (verify->parsed()) return cmd_verify(f, labels_path);
    if (gen->parsed()) return cmd_gen(f, gen_output);
    return kExitUsage;
  } catch (const hookcc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hookcc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hookcc::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
