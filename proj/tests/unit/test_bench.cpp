// Copyright 2026 The simonbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simonbench/report.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "simonbench/harness.hpp"
#include "simonbench/report.hpp"
#include "simonbench/stats.hpp"

using namespace simonbench;

namespace {

ShotRecord shot(const char* z) { return ShotRecord{Bitstring::from_string(z), Bitstring(0), 0}; }

ErrorRateRecord row(std::size_t n, double rate, std::optional<std::size_t> rep = std::nullopt) {
  return ErrorRateRecord{n, OracleKind::kComplex, "ideal", rep, 100,
                         static_cast<std::size_t>(std::llround(rate * 100)), rate, 1};
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_min = 2;
  c.n_max = 4;
  c.shots = 256;
  c.repetitions = 2;
  c.seed = 42;
  return c;
}

}  // namespace

TEST_CASE("algorithmic error rate") {
  const auto s = Bitstring::ones(3);
  std::vector<ShotRecord> ok{shot("110"), shot("000"), shot("011")};
  CHECK(algorithmic_error_rate(ok, s) == 0.0);
  std::vector<ShotRecord> mixed{shot("100"), shot("010"), shot("111"), shot("000"),
                                shot("110"), shot("101"), shot("011"), shot("000")};
  CHECK(algorithmic_error_rate(mixed, s) == 0.375);
  CHECK_THROWS_AS(algorithmic_error_rate({}, s), std::invalid_argument);
  std::vector<ShotRecord> wrong{shot("10")};
  CHECK_THROWS_AS(algorithmic_error_rate(wrong, s), std::invalid_argument);
}

TEST_CASE("uniform random outcomes give 0.5") {
  std::mt19937_64 rng(31337);
  constexpr std::size_t kShots = 100000;
  const std::size_t n = 9;
  std::vector<ShotRecord> records;
  records.reserve(kShots);
  for (std::size_t i = 0; i < kShots; ++i) {
    records.push_back(ShotRecord{Bitstring::from_index(rng() & 511U, n), Bitstring(0), i});
  }
  const double r = algorithmic_error_rate(records, Bitstring::ones(n));
  CHECK(std::abs(r - 0.5) <= 3.0 * binomial_sigma(0.5, kShots));
}

TEST_CASE("statistics helpers") {
  const std::vector<double> x{1, 2, 3, 4, 5, 6};
  const std::vector<double> y{1, 3, 2, 5, 4, 6};
  const auto s = spearman(x, y);
  CHECK(s.rho == doctest::Approx(0.8857142857142858));
  CHECK(s.p_value == doctest::Approx(0.00942274052478133).epsilon(1e-6));
  const std::vector<double> tx{1, 2, 2, 3, 4};
  const std::vector<double> ty{2, 1, 4, 4, 5};
  const auto t = spearman(tx, ty);
  CHECK(t.rho == doctest::Approx(0.7631578947368421));
  CHECK(t.p_value == doctest::Approx(0.06666955976590315).epsilon(1e-6));
  CHECK_THROWS_AS(spearman(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
                  std::invalid_argument);

  const std::vector<double> lx{2, 12};
  const std::vector<double> ly{0.1, 0.3};
  const auto fit = least_squares(lx, ly);
  CHECK(fit.slope == doctest::Approx(0.02));
  CHECK(fit.intercept == doctest::Approx(0.06));
  CHECK(binomial_sigma(0.5, 100) == doctest::Approx(0.05));
}

TEST_CASE("config parsing") {
  const auto c = ExperimentConfig::from_json_text(R"({
    "n": [3, 5], "oracles": ["simple"], "backend": "noisy:brisbane",
    "topology": "eagle127", "shots": 100, "repetitions": 2, "seed": 9,
    "swap_error_multiplier": 4})");
  CHECK(c.n_min == 3);
  CHECK(c.n_max == 5);
  CHECK(c.oracles == std::vector<OracleKind>{OracleKind::kSimple});
  CHECK(c.backend.kind == Backend::Kind::kDevice);
  CHECK(c.topology.kind == Topology::Kind::kEagle127);
  CHECK(c.noise_model().p2 == doctest::Approx(0.0074));
  CHECK(c.noise_model().swap_error_multiplier == 4.0);
  const auto again = ExperimentConfig::from_json_text(c.to_json_text());
  CHECK(again.to_json_text() == c.to_json_text());

  const auto custom = ExperimentConfig::from_json_text(
      R"({"noise": {"p1": 0, "p2": 0.01, "readout": 0.02}, "backend": "noisy:custom", "n": 4})");
  CHECK(custom.n_min == 4);
  CHECK(custom.n_max == 4);
  CHECK(custom.noise_model().readout == doctest::Approx(0.02));

  CHECK_THROWS_AS(ExperimentConfig::from_json_text(R"({"shotz": 5})"), std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_json_text(R"({"shots": 0})").validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_json_text(R"({"n": [2, 14]})").validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_json_text(R"({"backend": "noisy:custom"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_json_text("{not json"), std::invalid_argument);
}

TEST_CASE("ideal experiment is error free") {
  auto config = small_config();
  config.n_max = 6;
  for (auto topology : {Topology::Kind::kAllToAll, Topology::Kind::kEagle127}) {
    config.topology.kind = topology;
    const auto table = run_experiment(config);
    CHECK(table.size() == 5 * 2 * 3);
    for (const auto& r : table) CHECK(r.error_rate == 0.0);
  }
}

TEST_CASE("experiment table shape and determinism") {
  auto config = small_config();
  config.backend = Backend::parse("noisy:aria-1");
  const auto a = run_experiment(config);
  CHECK(a == run_experiment(config));
  config.workers = 3;
  CHECK(a == run_experiment(config));
  CHECK(a.front().backend == "noisy:aria-1");
  for (const auto& r : a) {
    CHECK(r.error_rate == static_cast<double>(r.invalid_shots) / static_cast<double>(r.shots));
    CHECK(r.error_rate >= 0.0);
    CHECK(r.error_rate <= 1.0);
  }
  // Mean row pools its group.
  const auto& rep0 = a[0];
  const auto& rep1 = a[1];
  const auto& mean = a[2];
  CHECK_FALSE(mean.repetition);
  CHECK(mean.shots == rep0.shots + rep1.shots);
  CHECK(mean.invalid_shots == rep0.invalid_shots + rep1.invalid_shots);
  config.seed = 43;
  CHECK(a != run_experiment(config));
}

TEST_CASE("report formats") {
  ErrorRateTable one{row(3, 0.25, 0)};
  const auto csv = report(one, ReportFormat::kCsv);
  CHECK(csv == "n,oracle,backend,repetition,shots,error_rate,seed\n3,complex,ideal,0,100,0.25,1\n");
  CHECK_THROWS_AS(report({}, ReportFormat::kCsv), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);

  ErrorRateTable table{row(4, 0.5), row(2, 0.1, 1), row(2, 0.2, 0), row(2, 0.15), row(4, 0.5, 0)};
  const auto first = report(table, ReportFormat::kCsv);
  CHECK(first == report(table, ReportFormat::kCsv));
  auto sorted = table;
  canonical_order(sorted);
  CHECK(sorted[0].repetition == 0);
  CHECK(sorted[1].repetition == 1);
  CHECK_FALSE(sorted[2].repetition);
  CHECK(parse_table(first, ReportFormat::kCsv) == sorted);
  CHECK(parse_table(report(table, ReportFormat::kJson), ReportFormat::kJson) == sorted);
  CHECK_THROWS_AS(parse_table("a,b\n", ReportFormat::kCsv), std::invalid_argument);
}

TEST_CASE("linear fit and extrapolation") {
  const auto fit = linear_fit_extrapolate({row(2, 0.10), row(12, 0.30)});
  CHECK(fit.slope == doctest::Approx(0.02));
  CHECK(fit.raw_projection == doctest::Approx(1.12));
  CHECK(fit.projected_rate == 0.5);
  CHECK(fit.projected_n == 53.0);

  const auto flat = linear_fit_extrapolate({row(2, 0.0), row(5, 0.0), row(9, 0.0)});
  CHECK(flat.projected_rate == 0.0);

  // Negative projections clip to zero.
  CHECK(linear_fit_extrapolate({row(2, 0.3), row(12, 0.1)}).projected_rate == 0.0);
  CHECK_THROWS_AS(linear_fit_extrapolate({row(3, 0.1), row(3, 0.2)}), std::invalid_argument);

  // Mean rows take precedence over repetitions.
  const auto means = linear_fit_extrapolate({row(2, 0.9, 0), row(2, 0.1), row(12, 0.3)});
  CHECK(means.slope == doctest::Approx(0.02));
}

TEST_CASE("end-to-end secret recovery") {
  ExperimentConfig c;
  c.n_min = c.n_max = 6;
  c.oracles = {OracleKind::kComplex};
  const auto six = recover_secret_end_to_end(c, 200);
  REQUIRE(six.ok());
  CHECK(six.secret->to_string() == "111111");
  CHECK(six.non_orthogonal_rows == 0);

  c.n_min = c.n_max = 2;
  const auto two = recover_secret_end_to_end(c, 50);
  REQUIRE(two.ok());
  CHECK(two.secret->to_string() == "11");

  c.n_min = c.n_max = 8;
  c.backend.kind = Backend::Kind::kCustom;
  c.backend.custom = NoiseModel{0.0, 0.0, 0.4, 1.0};
  const auto noisy = recover_secret_end_to_end(c, 12);
  CHECK_FALSE(noisy.ok());
  CHECK(noisy.non_orthogonal_rows > 0);
  CHECK(noisy.attempts == 12);
  CHECK_FALSE(noisy.failure.empty());

  CHECK_THROWS_AS(recover_secret_end_to_end(c, 3), std::invalid_argument);
}

TEST_CASE("cnot distance") {
  CHECK(predicted_cnot_failure(0.0074, 1.0, 1) == doctest::Approx(0.0074));
  CHECK(predicted_cnot_failure(0.0074, 1.0, 3) == doctest::Approx(1.0 - std::pow(1.0 - 0.0074, 7)));

  const auto eagle = heavy_hex_map("eagle127");
  const std::vector<std::size_t> targets{40, 41, 42};
  const auto rows =
      cnot_distance_experiment(eagle, NoiseModel{0.0, 0.0, 0.0, 1.0}, 39, targets, 500);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].distance == i + 1);
    CHECK(rows[i].inserted_swaps == i);
    CHECK(rows[i].failures == 0);
  }
  const std::vector<std::size_t> bad{500};
  CHECK_THROWS_AS(cnot_distance_experiment(eagle, NoiseModel{}, 39, bad, 10), ExperimentError);
  const CouplingMap split(3, {{0, 1}});
  const std::vector<std::size_t> unreachable{2};
  CHECK_THROWS_AS(cnot_distance_experiment(split, NoiseModel{}, 0, unreachable, 10),
                  ExperimentError);
}
