// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pia/bench.hpp"
#include "pia/error.hpp"
#include "pia/grid_search.hpp"
#include "pia/lp_formulation.hpp"
#include "pia/oracle.hpp"
#include "pia/polygen.hpp"
#include "pia/random_search.hpp"
#include "pia/simplex.hpp"
#include "random_lp.hpp"
#include "recorders.hpp"
#include "shapes.hpp"

using namespace pia;

namespace {

constexpr std::uint64_t kCorpusSeed = 7;
constexpr std::size_t kCorpusSize = 200;
constexpr std::size_t kRepeats = 10;
constexpr std::uint64_t kBenchSeed = 2012;
constexpr std::uint64_t kLpSeed = 100;

struct Outcome {
  bool pass;
  std::string detail;
};

const BenchRow& row_named(const BenchReport& report, const std::string& label) {
  for (const BenchRow& row : report.rows) {
    if (row.spec.label() == label) return row;
  }
  throw Error(ErrorCode::InvalidInput, "missing bench row " + label);
}

bool close(double a, double b, double rel, double scale) { return std::abs(a - b) <= rel * scale; }

class Acceptance {
 public:
  Acceptance()
      : corpus_(generate_corpus(CorpusShape::Triangle, kCorpusSize, kCorpusSeed)),
        suite_(default_suite()) {
    options_.repeats = kRepeats;
    options_.seed = kBenchSeed;
    report_ = run_benchmark(corpus_, suite_, options_);
  }

  // LP radius equals the closed-form inradius within 1e-9 relative on every
  // instance, in under a second overall.
  Outcome lp_exactness() const {
    std::size_t exact = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const Polygon& tri : corpus_) {
      const double r = solve_chebyshev(tri).radius;
      if (relative_error(r, triangle_incenter(tri).radius) <= 1e-9) ++exact;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {exact == corpus_.size() && seconds < 1.0,
            std::to_string(exact) + "/" + std::to_string(corpus_.size()) + " within 1e-9, " +
                std::to_string(seconds) + " s"};
  }

  Outcome search_quality() const {
    const double grid = row_named(report_, "grid N=M=20").fraction_within(ErrorBucket::AtMost01Pct);
    const double random = row_named(report_, "random K=50").fraction_within(ErrorBucket::AtMost01Pct);
    char buf[160];
    std::snprintf(buf, sizeof buf, "grid N=M=20 %.2f%% (>= 90%%), random K=50 %.2f%% (>= 85%%) within 0.1%%",
                  100 * grid, 100 * random);
    return {grid >= 0.90 && random >= 0.85, buf};
  }

  Outcome runtime_ordering() const {
    const double lp = row_named(report_, "lp").median_runtime_us;
    const double random = row_named(report_, "random K=15").median_runtime_us;
    const double grid = row_named(report_, "grid N=M=12").median_runtime_us;
    char buf[160];
    std::snprintf(buf, sizeof buf, "median us: lp %.2f < random K=15 %.2f < grid N=M=12 %.2f", lp, random,
                  grid);
    return {lp < random && random < grid, buf};
  }

  static Outcome simplex_oracle() {
    std::size_t agree = 0;
    std::size_t optimal = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const LpProblem lp = test::random_lp(kLpSeed, i);
      const auto fast = solve_lp(lp);
      const auto slow = enumerate_vertices_oracle(lp);
      if (fast.status != slow.status) continue;
      if (fast.status == LpStatus::Optimal) {
        ++optimal;
        if (std::abs(fast.objective - slow.objective) > 1e-9) continue;
      }
      ++agree;
    }
    return {agree == 100, std::to_string(agree) + "/100 agree (" + std::to_string(optimal) + " optimal)"};
  }

  Outcome feasibility_dominance() const {
    std::size_t violations = 0;
    for (const BenchRow& row : report_.rows) violations += row.dominance_violations;
    std::size_t failures = 0;
    for (const BenchRow& row : report_.rows) failures += row.failures;
    return {violations == 0, std::to_string(violations) + " violations over " +
                                 std::to_string(report_.rows.size() * kCorpusSize * kRepeats) + " solves (" +
                                 std::to_string(failures) + " solver failures)"};
  }

  Outcome monotonicity() const {
    std::size_t bad = 0;
    std::size_t traced = 0;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      for (const SolverSpec& spec : suite_) {
        test::TraceRecorder trace;
        if (spec.algorithm == Algorithm::Grid) {
          solve_grid(corpus_[i], spec.grid, &trace);
        } else if (spec.algorithm == Algorithm::Random) {
          RandomConfig cfg = spec.random;
          cfg.seed = i;
          solve_random(corpus_[i], cfg, &trace);
        } else {
          continue;
        }
        ++traced;
        if (!trace.clearance_non_decreasing()) ++bad;
      }
    }
    return {bad == 0, std::to_string(traced - bad) + "/" + std::to_string(traced) + " traces non-decreasing"};
  }

  Outcome determinism() const {
    bool ok = generate_corpus(CorpusShape::Triangle, kCorpusSize, kCorpusSeed) == corpus_;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      RandomConfig cfg;
      cfg.seed = 1000 + i;
      ok = ok && solve_random(corpus_[i], cfg) == solve_random(corpus_[i], cfg);
    }
    const auto again = run_benchmark(corpus_, suite_, options_);
    for (std::size_t r = 0; r < report_.rows.size(); ++r) {
      ok = ok && again.rows[r].bucket_percent == report_.rows[r].bucket_percent &&
           again.rows[r].bucket_counts == report_.rows[r].bucket_counts;
    }
    return {ok, ok ? "corpus, random solves and bench buckets identical on rerun" : "mismatch on rerun"};
  }

  static Outcome non_convex() {
    const Polygon l = test::l_shape();
    const double reference = brute_force_pia(l, 4001).radius;
    GridConfig grid;
    grid.n = grid.m = 20;
    grid.min_accuracy = kBenchAccuracy;
    RandomConfig random;
    random.k = 50;
    random.min_accuracy = kBenchAccuracy;
    random.seed = 42;
    const double g = solve_grid(l, grid).radius;
    const double r = solve_random(l, random).radius;
    bool refused = false;
    try {
      solve_chebyshev(l);
    } catch (const Error& e) {
      refused = e.code() == ErrorCode::NotConvex;
    }
    const bool ok = relative_error(g, reference) <= 0.01 && relative_error(r, reference) <= 0.01 && refused;
    char buf[200];
    std::snprintf(buf, sizeof buf, "reference %.6f, grid %.6f, random %.6f, lp %s", reference, g, r,
                  refused ? "NotConvex" : "did not refuse");
    return {ok, buf};
  }

  Outcome equivariance() const {
    const Point offset{10.5, -3.25};
    const double factor = 7.5;
    std::size_t ok = 0;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const Polygon& tri = corpus_[i];
      const auto base = solve_chebyshev(tri);
      const auto moved = solve_chebyshev(tri.translated(offset));
      const auto big = solve_chebyshev(tri.scaled(factor));
      const double span = std::max({1.0, std::abs(offset.x), std::abs(offset.y)});
      bool pass = close(moved.radius, base.radius, 1e-9, base.radius) &&
                  close(moved.center.x, base.center.x + offset.x, 1e-9, span) &&
                  close(moved.center.y, base.center.y + offset.y, 1e-9, span) &&
                  close(big.radius, factor * base.radius, 1e-9, factor * base.radius) &&
                  close(big.center.x, factor * base.center.x, 1e-9, factor) &&
                  close(big.center.y, factor * base.center.y, 1e-9, factor);

      RandomConfig cfg;
      cfg.seed = 500 + i;
      const auto rbase = solve_random(tri, cfg);
      const auto rmoved = solve_random(tri.translated(offset), cfg);
      pass = pass && std::abs(rmoved.center.x - (rbase.center.x + offset.x)) <= 1e-9 &&
             std::abs(rmoved.center.y - (rbase.center.y + offset.y)) <= 1e-9;
      ok += pass ? 1 : 0;
    }
    return {ok == corpus_.size(), std::to_string(ok) + "/" + std::to_string(corpus_.size()) +
                                      " polygons equivariant (lp translate+scale, random translate)"};
  }

  const BenchReport& report() const { return report_; }

 private:
  std::vector<Polygon> corpus_;
  std::vector<SolverSpec> suite_;
  BenchOptions options_;
  BenchReport report_;
};

}  // namespace

int main() {
  Acceptance acceptance;
  std::printf("%s\n", to_table(acceptance.report()).c_str());

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 LP exactness", [&] { return acceptance.lp_exactness(); }},
      {"2 search quality", [&] { return acceptance.search_quality(); }},
      {"3 runtime ordering", [&] { return acceptance.runtime_ordering(); }},
      {"4 simplex oracle equivalence", [] { return Acceptance::simplex_oracle(); }},
      {"5 feasibility dominance", [&] { return acceptance.feasibility_dominance(); }},
      {"6 incumbent monotonicity", [&] { return acceptance.monotonicity(); }},
      {"7 determinism", [&] { return acceptance.determinism(); }},
      {"8 non-convex sanity", [] { return Acceptance::non_convex(); }},
      {"9 equivariance", [&] { return acceptance.equivariance(); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
    failed += outcome.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
