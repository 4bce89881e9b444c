#include <doctest.h>

#include <numeric>
#include <sstream>

#include "pia/bench.hpp"
#include "pia/error.hpp"
#include "pia/polygen.hpp"
#include "shapes.hpp"

using namespace pia;

TEST_CASE("classify_error buckets") {
  CHECK(classify_error(2.0, 2.0) == ErrorBucket::Exact);
  CHECK(classify_error(1.0 + 5e-13, 1.0) == ErrorBucket::Exact);
  CHECK(classify_error(1.0 - 5e-5, 1.0) == ErrorBucket::AtMost001Pct);
  CHECK(classify_error(1.0 - 1e-4, 1.0) == ErrorBucket::AtMost001Pct);
  CHECK(classify_error(1.0 - 5e-4, 1.0) == ErrorBucket::AtMost01Pct);
  CHECK(classify_error(1.0 - 5e-3, 1.0) == ErrorBucket::AtMost1Pct);
  CHECK(classify_error(0.98, 1.0) == ErrorBucket::Over1Pct);
  CHECK(classify_error(0.0, 1.0) == ErrorBucket::Over1Pct);
}

TEST_CASE("suite parsing") {
  const auto suite = default_suite();
  REQUIRE(suite.size() == 7);
  CHECK(suite[0].label() == "grid N=M=12");
  CHECK(suite[5].label() == "random K=50");
  CHECK(suite[6].algorithm == Algorithm::Lp);

  const auto custom = parse_suite("grid20,random50,lp", 1e-6);
  REQUIRE(custom.size() == 3);
  CHECK(custom[0].grid.n == 20);
  CHECK(custom[0].grid.m == 20);
  CHECK(custom[0].grid.min_accuracy == 1e-6);
  CHECK(custom[1].random.k == 50);
  CHECK_THROWS_AS(parse_suite("grid", 1e-6), Error);
  CHECK_THROWS_AS(parse_suite("simplex", 1e-6), Error);
  CHECK_THROWS_AS(parse_suite("", 1e-6), Error);
  CHECK_THROWS_AS(parse_solver("grid1"), Error);
}

TEST_CASE("run_benchmark aggregates and reproduces") {
  const auto corpus = generate_corpus(CorpusShape::Triangle, 20, 3);
  const auto suite = parse_suite("grid12,random15,lp", 1e-9);
  BenchOptions options;
  options.repeats = 2;
  options.seed = 5;
  const auto report = run_benchmark(corpus, suite, options);
  REQUIRE(report.rows.size() == 3);
  for (const BenchRow& row : report.rows) {
    CHECK(row.instances == 20);
    CHECK(row.solves == 40);
    CHECK(row.dominance_violations == 0);
    const double total = std::accumulate(row.bucket_percent.begin(), row.bucket_percent.end(), 0.0);
    CHECK(total == doctest::Approx(100.0).epsilon(1e-4));
    CHECK(row.median_runtime_us > 0.0);
  }
  CHECK(report.rows[2].fraction_within(ErrorBucket::Exact) +
            report.rows[2].fraction_within(ErrorBucket::AtMost001Pct) >
        0.0);

  const auto again = run_benchmark(corpus, suite, options);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(again.rows[i].bucket_counts == report.rows[i].bucket_counts);
    CHECK(again.rows[i].bucket_percent == report.rows[i].bucket_percent);
  }

  const std::string csv = to_csv(report);
  CHECK(csv.starts_with("algorithm,params,exact_pct"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(to_table(report).find("random K=15") != std::string::npos);
}

TEST_CASE("run_benchmark records failures instead of aborting") {
  std::vector<Polygon> corpus{test::l_shape()};
  BenchOptions options;
  options.repeats = 1;
  options.oracle_resolution = 401;
  const auto report = run_benchmark(corpus, parse_suite("lp,grid12", 1e-6), options);
  CHECK(report.rows[0].failures == 1);
  CHECK(report.rows[1].failures == 0);
  CHECK_THROWS_AS(run_benchmark(std::vector<Polygon>{}, default_suite(), options), Error);
}
