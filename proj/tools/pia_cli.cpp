// pia: largest inscribed circle of a polygon from the command line.
//
//   pia solve --algorithm lp --input square.json
//   pia gen --shape triangle --count 200 --seed 7 --out corpus.jsonl
//   pia bench --corpus corpus.jsonl --suite default --repeats 10 --out report.csv

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pia/bench.hpp"
#include "pia/error.hpp"
#include "pia/grid_search.hpp"
#include "pia/io.hpp"
#include "pia/lp_formulation.hpp"
#include "pia/polygen.hpp"
#include "pia/random_search.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents) || !out.flush()) throw InputError("cannot write " + path);
}

class NodeRecorder : public pia::SearchObserver {
 public:
  void on_node(pia::Point p, bool) override { nodes.push_back(p); }
  std::vector<pia::Point> nodes;
};

struct SolveArgs {
  std::string algorithm = "lp";
  std::string input;
  std::size_t n = 12;
  std::size_t m = 12;
  std::size_t k = 50;
  double accuracy = 1e-9;
  std::uint64_t seed = 0;
  std::string svg;
  bool show_nodes = false;
};

int run_solve(const SolveArgs& args) {
  // Whole file first; fall back to the first line so corpus files work too.
  const std::string text = read_file(args.input);
  pia::Polygon poly = [&] {
    try {
      return pia::polygon_from_json(text);
    } catch (const pia::Error& whole) {
      std::istringstream in(text);
      const auto corpus = pia::read_corpus(in);
      if (corpus.empty()) throw;
      return corpus.front();
    }
  }();

  NodeRecorder recorder;
  pia::SearchObserver* observer = args.show_nodes ? &recorder : nullptr;
  const auto start = std::chrono::steady_clock::now();
  pia::PiaResult result;
  if (args.algorithm == "grid") {
    pia::GridConfig cfg;
    cfg.n = args.n;
    cfg.m = args.m;
    cfg.min_accuracy = args.accuracy;
    result = pia::solve_grid(poly, cfg, observer);
  } else if (args.algorithm == "random") {
    pia::RandomConfig cfg;
    cfg.k = args.k;
    cfg.sample_cap = std::max(cfg.sample_cap, args.k);
    cfg.min_accuracy = args.accuracy;
    cfg.seed = args.seed;
    result = pia::solve_random(poly, cfg, observer);
  } else {
    result = pia::solve_chebyshev(poly);
  }
  const auto stop = std::chrono::steady_clock::now();

  nlohmann::ordered_json out;
  out["x"] = result.center.x;
  out["y"] = result.center.y;
  out["radius"] = result.radius;
  out["iterations"] = result.iterations;
  out["nodes_evaluated"] = result.nodes_evaluated;
  out["algorithm"] = args.algorithm;
  out["elapsed_us"] = std::chrono::duration<double, std::micro>(stop - start).count();
  std::cout << out.dump() << '\n';

  if (!args.svg.empty()) {
    pia::SvgOptions options;
    options.nodes = recorder.nodes;
    write_file(args.svg, pia::render_svg(poly, result, options));
  }
  return 0;
}

struct GenArgs {
  std::string shape = "triangle";
  std::size_t count = 200;
  std::uint64_t seed = 7;
  std::size_t n = 12;
  std::string out;
};

int run_gen(const GenArgs& args) {
  const auto shape = args.shape == "triangle" ? pia::CorpusShape::Triangle : pia::CorpusShape::Convex;
  const auto corpus = pia::generate_corpus(shape, args.count, args.seed, args.n);
  std::ostringstream os;
  pia::write_corpus(os, corpus);
  if (args.out.empty()) {
    std::cout << os.str();
  } else {
    write_file(args.out, os.str());
  }
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::string suite = "default";
  std::size_t repeats = 10;
  std::uint64_t seed = 0;
  double accuracy = pia::kBenchAccuracy;
  std::size_t oracle_resolution = 4001;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  std::istringstream in(read_file(args.corpus));
  const auto corpus = pia::read_corpus(in);
  if (corpus.empty()) throw InputError("corpus " + args.corpus + " is empty");
  const auto suite = pia::parse_suite(args.suite, args.accuracy);

  pia::BenchOptions options;
  options.repeats = args.repeats;
  options.seed = args.seed;
  options.oracle_resolution = args.oracle_resolution;
  const auto report = pia::run_benchmark(corpus, suite, options);

  std::cout << pia::to_table(report);
  if (!args.out.empty()) write_file(args.out, pia::to_csv(report));
  return 0;
}

bool is_input_error(pia::ErrorCode code) {
  return code == pia::ErrorCode::InvalidInput || code == pia::ErrorCode::InvalidPolygon ||
         code == pia::ErrorCode::GenerationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest inscribed circle (pole of inaccessibility) of a polygon"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one polygon");
  solve_cmd->add_option("--algorithm", solve.algorithm, "Solver")
      ->check(CLI::IsMember({"grid", "random", "lp"}));
  solve_cmd->add_option("--input", solve.input, "Polygon JSON file")->required();
  solve_cmd->add_option("--n", solve.n, "Grid columns")->check(CLI::Range(2, 1 << 20));
  solve_cmd->add_option("--m", solve.m, "Grid rows")->check(CLI::Range(2, 1 << 20));
  solve_cmd->add_option("--k", solve.k, "Consecutive misses before shrinking")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--accuracy", solve.accuracy, "Termination region size")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed, "PRNG seed");
  solve_cmd->add_option("--svg", solve.svg, "Write an SVG drawing here");
  solve_cmd->add_flag("--show-nodes", solve.show_nodes, "Overlay evaluated nodes in the SVG");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a polygon corpus");
  gen_cmd->add_option("--shape", gen.shape, "Polygon family")->check(CLI::IsMember({"triangle", "convex"}));
  gen_cmd->add_option("--count", gen.count, "Number of polygons")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Corpus seed");
  gen_cmd->add_option("--n", gen.n, "Vertices per convex polygon")->check(CLI::Range(3, 1 << 20));
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare solvers on a corpus");
  bench_cmd->add_option("--corpus", bench.corpus, "Corpus file, one polygon per line")->required();
  bench_cmd->add_option("--suite", bench.suite, "'default' or e.g. grid20,random50,lp");
  bench_cmd->add_option("--repeats", bench.repeats, "Solves per instance")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Base seed for randomized solvers");
  bench_cmd->add_option("--accuracy", bench.accuracy, "Search termination size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--oracle-resolution", bench.oracle_resolution,
                        "Lattice size of the non-triangle oracle")
      ->check(CLI::Range(100, 100000));
  bench_cmd->add_option("--out", bench.out, "CSV report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*gen_cmd) return run_gen(gen);
    return run_bench(bench);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const pia::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitInput : kExitSolver;
  }
}
