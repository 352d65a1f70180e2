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

#ifndef SIMONBENCH_REPORT_HPP
#define SIMONBENCH_REPORT_HPP

#include <span>
#include <string>
#include <string_view>

#include "simonbench/harness.hpp"

namespace simonbench {

enum class ReportFormat { kCsv, kJson };

/// "csv" or "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view text);

inline constexpr std::string_view kCsvHeader = "n,oracle,backend,repetition,shots,error_rate,seed";

/// CSV columns are exactly kCsvHeader; the pooled row has repetition "mean".
/// Rows are written in canonical order. Doubles use the shortest text that
/// reads back to the same value, so output is byte-stable.
/// Throws std::invalid_argument on an empty table.
std::string report(const ErrorRateTable& table, ReportFormat format);

/// Inverse of report(). For CSV, invalid_shots is recovered as
/// round(error_rate * shots).
ErrorRateTable parse_table(std::string_view text, ReportFormat format);

std::string cnot_distance_csv(std::span<const CnotDistanceRow> rows);
std::string fit_to_json(const FitResult& fit);

}  // namespace simonbench

#endif  // SIMONBENCH_REPORT_HPP
