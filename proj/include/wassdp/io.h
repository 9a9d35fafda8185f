// Copyright 2026 The WassDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV encodings of the library's values.
//
// Status codes: unreadable files and malformed content (bad syntax, missing
// keys, wrong types) come back as kDataLoss or kNotFound with a line
// number when one is known; well-formed content that fails validation
// keeps the library's kInvalidArgument.
//
// JSON output is canonical: sorted keys, two-space indent, shortest
// round-trip numbers and a trailing newline, so load then save reproduces a
// canonical file byte for byte. Infinite epsilon is written as "inf".

#ifndef WASSDP_IO_H_
#define WASSDP_IO_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "wassdp/distribution.h"
#include "wassdp/finite_metric.h"
#include "wassdp/hst.h"
#include "wassdp/privacy.h"

namespace wassdp {

using Json = nlohmann::json;

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, const std::string& contents);

// Parses JSON text; syntax errors name the line.
absl::StatusOr<Json> ParseJson(const std::string& text);
std::string DumpJson(const Json& json);

// {"domain": {"kind": "grid", "a", "b", "gamma"}
//           | {"kind": "metric", "id", "size"},
//  "weights": [...]}
Json DomainToJson(const Domain& domain);
absl::StatusOr<Domain> DomainFromJson(const Json& json);
Json DistributionToJson(const DiscreteDistribution& p);
absl::StatusOr<DiscreteDistribution> DistributionFromJson(const Json& json);

// {"id"?, "labels"?, "dist": [[...]]} or {"id"?, "points": [[x, y, ...]]}
// for Euclidean points. Labels default to "0", "1", ...
Json MetricToJson(const FiniteMetric& metric);
absl::StatusOr<FiniteMetric> MetricFromJson(const Json& json);

// {"top_weight", "depth", "edge_weights", "parents", "node_points",
//  "point_domain": {"id", "size"}}; node_points is -1 on internal nodes.
Json HstToJson(const Hst& hst);
absl::StatusOr<Hst> HstFromJson(const Json& json);

Json EpsilonToJson(double epsilon);
// {"entries": [{"mechanism", "epsilon", "delta", "detail"}],
//  "total_epsilon", "total_delta"}
Json LedgerToJson(const PrivacyLedger& ledger);

// Convenience wrappers over ReadFile and the parsers above.
absl::StatusOr<DiscreteDistribution> LoadDistribution(const std::string& path);
absl::StatusOr<FiniteMetric> LoadMetric(const std::string& path);
absl::StatusOr<Hst> LoadHst(const std::string& path);

// One value per line. Blank lines are skipped and a non-numeric first line
// is taken as a header; any other bad line is an error naming its number.
absl::StatusOr<std::vector<double>> ParseSampleCsv(const std::string& text);
absl::StatusOr<std::vector<double>> LoadSampleCsv(const std::string& path);

// `dimension` comma-separated numbers per line, same header and blank-line
// rules as ParseSampleCsv.
absl::StatusOr<std::vector<std::vector<double>>> ParsePointCsv(
    const std::string& text, int dimension);
absl::StatusOr<std::vector<std::vector<double>>> LoadPointCsv(
    const std::string& path, int dimension);

// Adds "<path>:" context to a status.
absl::Status Annotate(const absl::Status& status, const std::string& where);

}  // namespace wassdp

#endif  // WASSDP_IO_H_
