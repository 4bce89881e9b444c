#include "pia/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>

#include "pia/error.hpp"
#include "pia/lp_formulation.hpp"
#include "pia/oracle.hpp"
#include "pia/rng.hpp"

namespace pia {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Grid: return "grid";
    case Algorithm::Random: return "random";
    case Algorithm::Lp: return "lp";
  }
  return "unknown";
}

std::string_view to_string(ErrorBucket bucket) {
  switch (bucket) {
    case ErrorBucket::Exact: return "exact";
    case ErrorBucket::AtMost001Pct: return "<=0.01%";
    case ErrorBucket::AtMost01Pct: return "<=0.1%";
    case ErrorBucket::AtMost1Pct: return "<=1%";
    case ErrorBucket::Over1Pct: return ">1%";
  }
  return "unknown";
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string format_fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::optional<std::size_t> parse_count(std::string_view digits) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  return value;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

struct Reference {
  double radius;
  bool exact;
};

Reference reference_for(const Polygon& poly, std::size_t resolution) {
  if (poly.size() == 3) return {triangle_incenter(poly).radius, true};
  return {brute_force_pia(poly, resolution).radius, false};
}

PiaResult run_solver(const SolverSpec& spec, const Polygon& poly, std::uint64_t seed) {
  switch (spec.algorithm) {
    case Algorithm::Grid: return solve_grid(poly, spec.grid);
    case Algorithm::Random: {
      RandomConfig cfg = spec.random;
      cfg.seed = seed;
      return solve_random(poly, cfg);
    }
    case Algorithm::Lp: return solve_chebyshev(poly);
  }
  throw Error(ErrorCode::InvalidInput, "unknown algorithm");
}

}  // namespace

std::string SolverSpec::params() const {
  switch (algorithm) {
    case Algorithm::Grid:
      return "n=" + std::to_string(grid.n) + " m=" + std::to_string(grid.m) +
             " accuracy=" + format_double(grid.min_accuracy);
    case Algorithm::Random:
      return "k=" + std::to_string(random.k) + " accuracy=" + format_double(random.min_accuracy) +
             " cap=" + std::to_string(random.sample_cap);
    case Algorithm::Lp: return "";
  }
  return "";
}

std::string SolverSpec::label() const {
  switch (algorithm) {
    case Algorithm::Grid: return "grid N=M=" + std::to_string(grid.n);
    case Algorithm::Random: return "random K=" + std::to_string(random.k);
    case Algorithm::Lp: return "lp";
  }
  return "";
}

std::vector<SolverSpec> default_suite(double accuracy) {
  std::vector<SolverSpec> suite;
  for (const char* name : {"grid12", "grid15", "grid20", "random15", "random30", "random50", "lp"}) {
    suite.push_back(parse_solver(name, accuracy));
  }
  return suite;
}

SolverSpec parse_solver(std::string_view name, double accuracy) {
  SolverSpec spec;
  if (name == "lp") {
    spec.algorithm = Algorithm::Lp;
    return spec;
  }
  if (name.starts_with("grid")) {
    const auto n = parse_count(name.substr(4));
    if (!n || *n < 2) throw Error(ErrorCode::InvalidInput, "bad grid solver name: " + std::string(name));
    spec.algorithm = Algorithm::Grid;
    spec.grid.n = spec.grid.m = *n;
    spec.grid.min_accuracy = accuracy;
    return spec;
  }
  if (name.starts_with("random")) {
    const auto k = parse_count(name.substr(6));
    if (!k || *k < 1) throw Error(ErrorCode::InvalidInput, "bad random solver name: " + std::string(name));
    spec.algorithm = Algorithm::Random;
    spec.random.k = *k;
    spec.random.sample_cap = std::max(spec.random.sample_cap, *k);
    spec.random.min_accuracy = accuracy;
    return spec;
  }
  throw Error(ErrorCode::InvalidInput, "unknown solver: " + std::string(name));
}

std::vector<SolverSpec> parse_suite(std::string_view spec, double accuracy) {
  if (spec == "default") return default_suite(accuracy);
  std::vector<SolverSpec> suite;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view name = spec.substr(0, comma);
    if (!name.empty()) suite.push_back(parse_solver(name, accuracy));
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  if (suite.empty()) throw Error(ErrorCode::InvalidInput, "empty solver suite");
  return suite;
}

double relative_error(double found, double exact) { return std::abs(found - exact) / exact; }

ErrorBucket classify_error(double found, double exact) {
  const double rel = relative_error(found, exact);
  if (rel < kExactThreshold) return ErrorBucket::Exact;
  if (rel <= 1e-4) return ErrorBucket::AtMost001Pct;
  if (rel <= 1e-3) return ErrorBucket::AtMost01Pct;
  if (rel <= 1e-2) return ErrorBucket::AtMost1Pct;
  return ErrorBucket::Over1Pct;
}

double BenchRow::fraction_within(ErrorBucket worst) const {
  if (solves == 0) return 0.0;
  std::size_t hits = 0;
  for (std::size_t b = 0; b <= static_cast<std::size_t>(worst); ++b) hits += bucket_counts[b];
  return static_cast<double>(hits) / static_cast<double>(solves);
}

BenchReport run_benchmark(std::span<const Polygon> corpus, std::span<const SolverSpec> suite,
                          const BenchOptions& options) {
  if (corpus.empty()) throw Error(ErrorCode::InvalidInput, "empty corpus");
  if (options.repeats < 1) throw Error(ErrorCode::InvalidInput, "repeats must be at least 1");

  std::vector<Reference> references;
  references.reserve(corpus.size());
  for (const Polygon& poly : corpus) references.push_back(reference_for(poly, options.oracle_resolution));

  BenchReport report;
  report.seed = options.seed;
  report.repeats = options.repeats;

  for (const SolverSpec& spec : suite) {
    BenchRow row;
    row.spec = spec;
    row.instances = corpus.size();
    std::vector<double> runtimes;
    runtimes.reserve(corpus.size() * options.repeats);

    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t r = 0; r < options.repeats; ++r) {
        ++row.solves;
        const std::uint64_t seed = Rng::substream(options.seed, i * options.repeats + r).next();
        const auto start = std::chrono::steady_clock::now();
        PiaResult result;
        try {
          result = run_solver(spec, corpus[i], seed);
        } catch (const Error&) {
          ++row.failures;
          continue;
        }
        const auto stop = std::chrono::steady_clock::now();
        runtimes.push_back(std::chrono::duration<double, std::micro>(stop - start).count());

        const Reference& ref = references[i];
        if (ref.exact && result.radius > ref.radius + 1e-9) ++row.dominance_violations;
        ++row.bucket_counts[static_cast<std::size_t>(classify_error(result.radius, ref.radius))];
      }
    }

    const std::size_t succeeded = row.solves - row.failures;
    for (std::size_t b = 0; b < kBucketCount; ++b) {
      row.bucket_percent[b] =
          succeeded == 0 ? 0.0
                         : 100.0 * static_cast<double>(row.bucket_counts[b]) / static_cast<double>(succeeded);
    }
    row.median_runtime_us = median(runtimes);
    row.mean_runtime_us =
        runtimes.empty() ? 0.0
                         : std::accumulate(runtimes.begin(), runtimes.end(), 0.0) /
                               static_cast<double>(runtimes.size());
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "algorithm,params,exact_pct,le_0.01pct,le_0.1pct,le_1pct,gt_1pct,"
        "median_runtime_us,mean_runtime_us,instances,solves,failures,dominance_violations\n";
  for (const BenchRow& row : report.rows) {
    os << to_string(row.spec.algorithm) << ',' << row.spec.params();
    for (double pct : row.bucket_percent) os << ',' << format_fixed(pct, 2);
    os << ',' << format_fixed(row.median_runtime_us, 3) << ',' << format_fixed(row.mean_runtime_us, 3)
       << ',' << row.instances << ',' << row.solves << ',' << row.failures << ','
       << row.dominance_violations << '\n';
  }
  return os.str();
}

std::string to_table(const BenchReport& report) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"solver", "exact %", "<=0.01% %", "<=0.1% %", "<=1% %", ">1% %", "median us",
                   "mean us", "fail"});
  for (const BenchRow& row : report.rows) {
    std::vector<std::string> line{row.spec.label()};
    for (double pct : row.bucket_percent) line.push_back(format_fixed(pct, 2));
    line.push_back(format_fixed(row.median_runtime_us, 1));
    line.push_back(format_fixed(row.mean_runtime_us, 1));
    line.push_back(std::to_string(row.failures));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        os << line[c] << std::string(width[c] - line[c].size(), ' ');
      } else {
        os << "  " << std::string(width[c] - line[c].size(), ' ') << line[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pia
