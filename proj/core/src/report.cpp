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

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace simonbench {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("report: cannot format double");
  return std::string(buf, ptr);
}

template <class T>
T parse_number(std::string_view field, std::size_t line, const char* column) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument("report line " + std::to_string(line) + ": bad " + column + " '" +
                                std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ErrorRateTable parse_csv(std::string_view text) {
  ErrorRateTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw std::invalid_argument("report line 1: expected header '" + std::string(kCsvHeader) +
                                    "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 7) {
      throw std::invalid_argument("report line " + std::to_string(line_no) + ": expected 7 fields");
    }
    ErrorRateRecord r;
    r.n = parse_number<std::size_t>(f[0], line_no, "n");
    r.oracle = parse_oracle_kind(f[1]);
    r.backend = std::string(f[2]);
    if (f[3] != "mean") r.repetition = parse_number<std::size_t>(f[3], line_no, "repetition");
    r.shots = parse_number<std::size_t>(f[4], line_no, "shots");
    r.error_rate = parse_number<double>(f[5], line_no, "error_rate");
    r.seed = parse_number<std::uint64_t>(f[6], line_no, "seed");
    r.invalid_shots = static_cast<std::size_t>(std::llround(r.error_rate * static_cast<double>(r.shots)));
    table.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("report: empty CSV");
  return table;
}

ErrorRateTable parse_json(std::string_view text) {
  ErrorRateTable table;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& e : doc.at("records")) {
      ErrorRateRecord r;
      r.n = e.at("n").get<std::size_t>();
      r.oracle = parse_oracle_kind(e.at("oracle").get<std::string>());
      r.backend = e.at("backend").get<std::string>();
      const auto& rep = e.at("repetition");
      if (!(rep.is_string() && rep.get<std::string>() == "mean")) r.repetition = rep.get<std::size_t>();
      r.shots = e.at("shots").get<std::size_t>();
      r.invalid_shots = e.at("invalid_shots").get<std::size_t>();
      r.error_rate = e.at("error_rate").get<double>();
      r.seed = e.at("seed").get<std::uint64_t>();
      table.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
  return table;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format '" + std::string(text) +
                              "' (expected csv or json)");
}

std::string report(const ErrorRateTable& table, ReportFormat format) {
  if (table.empty()) throw std::invalid_argument("report: empty table");
  ErrorRateTable rows = table;
  canonical_order(rows);

  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json e;
      e["n"] = r.n;
      e["oracle"] = oracle_name(r.oracle);
      e["backend"] = r.backend;
      if (r.repetition) {
        e["repetition"] = *r.repetition;
      } else {
        e["repetition"] = "mean";
      }
      e["shots"] = r.shots;
      e["invalid_shots"] = r.invalid_shots;
      e["error_rate"] = r.error_rate;
      e["seed"] = r.seed;
      doc["records"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << oracle_name(r.oracle) << ',' << r.backend << ','
        << (r.repetition ? std::to_string(*r.repetition) : std::string("mean")) << ',' << r.shots
        << ',' << shortest(r.error_rate) << ',' << r.seed << '\n';
  }
  return out.str();
}

ErrorRateTable parse_table(std::string_view text, ReportFormat format) {
  return format == ReportFormat::kCsv ? parse_csv(text) : parse_json(text);
}

std::string cnot_distance_csv(std::span<const CnotDistanceRow> rows) {
  std::ostringstream out;
  out << "control,target,distance,inserted_swaps,shots,failures,observed,predicted\n";
  for (const auto& r : rows) {
    out << r.control << ',' << r.target << ',' << r.distance << ',' << r.inserted_swaps << ','
        << r.shots << ',' << r.failures << ',' << shortest(r.observed) << ','
        << shortest(r.predicted) << '\n';
  }
  return out.str();
}

std::string fit_to_json(const FitResult& fit) {
  nlohmann::ordered_json doc;
  doc["slope"] = fit.slope;
  doc["intercept"] = fit.intercept;
  doc["projected_n"] = fit.projected_n;
  doc["raw_projection"] = fit.raw_projection;
  doc["projected_rate"] = fit.projected_rate;
  return doc.dump(2) + "\n";
}

}  // namespace simonbench
