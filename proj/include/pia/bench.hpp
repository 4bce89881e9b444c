#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/grid_search.hpp"
#include "pia/random_search.hpp"

namespace pia {

enum class Algorithm { Grid, Random, Lp };

std::string_view to_string(Algorithm algorithm);

/// One column of the comparison table: an algorithm plus its parameters.
/// Only the config matching `algorithm` is used.
struct SolverSpec {
  Algorithm algorithm = Algorithm::Lp;
  GridConfig grid;
  RandomConfig random;

  std::string params() const;
  std::string label() const;
};

/// Search accuracy used by the default suite (unit-square corpora).
inline constexpr double kBenchAccuracy = 1e-12;

/// grid 12/15/20, random k = 15/30/50, lp.
std::vector<SolverSpec> default_suite(double accuracy = kBenchAccuracy);

/// Parses "grid<N>" (N = M), "random<K>" or "lp". Throws Error(InvalidInput).
SolverSpec parse_solver(std::string_view name, double accuracy = kBenchAccuracy);

/// "default" or a comma-separated list of solver names.
std::vector<SolverSpec> parse_suite(std::string_view spec, double accuracy = kBenchAccuracy);

enum class ErrorBucket { Exact, AtMost001Pct, AtMost01Pct, AtMost1Pct, Over1Pct };

inline constexpr std::size_t kBucketCount = 5;

std::string_view to_string(ErrorBucket bucket);

/// Relative errors below this count as exact.
inline constexpr double kExactThreshold = 1e-12;

double relative_error(double found, double exact);

/// Buckets |found - exact| / exact: [0, 1e-12), [1e-12, 1e-4], (1e-4, 1e-3],
/// (1e-3, 1e-2], (1e-2, inf).
ErrorBucket classify_error(double found, double exact);

struct BenchRow {
  SolverSpec spec;
  std::array<std::size_t, kBucketCount> bucket_counts{};
  /// Percentages over successful solves; they sum to 100.
  std::array<double, kBucketCount> bucket_percent{};
  double median_runtime_us = 0.0;
  double mean_runtime_us = 0.0;
  std::size_t instances = 0;
  std::size_t solves = 0;
  std::size_t failures = 0;
  /// Solves whose radius exceeded an exact oracle radius by more than 1e-9.
  std::size_t dominance_violations = 0;

  /// Share of all solves (failures count as misses) with a bucket no worse
  /// than `worst`.
  double fraction_within(ErrorBucket worst) const;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::uint64_t seed = 0;
  std::size_t repeats = 0;
};

struct BenchOptions {
  std::size_t repeats = 10;
  /// Base seed for the randomized solvers' per-(instance, repeat) streams.
  std::uint64_t seed = 0;
  /// Lattice resolution of the brute-force oracle for non-triangles.
  std::size_t oracle_resolution = 4001;
};

/// Runs every suite entry on every polygon `repeats` times. Triangles are
/// scored against the closed-form incircle, other polygons against the
/// brute-force lattice oracle. Solver errors are counted as failures.
BenchReport run_benchmark(std::span<const Polygon> corpus, std::span<const SolverSpec> suite,
                          const BenchOptions& options);

std::string to_csv(const BenchReport& report);
std::string to_table(const BenchReport& report);

}  // namespace pia
