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

#include "wassdp/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "wassdp/status_macros.h"

namespace wassdp {
namespace {

absl::Status Malformed(const std::string& what) {
  return absl::DataLossError(what);
}

absl::StatusOr<const Json*> Field(const Json& json, const std::string& key) {
  if (!json.is_object()) return Malformed("expected a JSON object.");
  const auto it = json.find(key);
  if (it == json.end()) return Malformed(absl::StrCat("missing key '", key, "'."));
  return &*it;
}

absl::StatusOr<double> AsNumber(const Json& json, const std::string& what) {
  if (!json.is_number()) {
    return Malformed(absl::StrCat(what, " should be a number."));
  }
  return json.get<double>();
}

absl::StatusOr<int64_t> AsInteger(const Json& json, const std::string& what) {
  if (!json.is_number_integer()) {
    return Malformed(absl::StrCat(what, " should be an integer."));
  }
  return json.get<int64_t>();
}

absl::StatusOr<std::string> AsString(const Json& json,
                                     const std::string& what) {
  if (!json.is_string()) {
    return Malformed(absl::StrCat(what, " should be a string."));
  }
  return json.get<std::string>();
}

absl::StatusOr<std::vector<double>> AsNumbers(const Json& json,
                                              const std::string& what) {
  if (!json.is_array()) {
    return Malformed(absl::StrCat(what, " should be an array."));
  }
  std::vector<double> out;
  out.reserve(json.size());
  for (size_t i = 0; i < json.size(); ++i) {
    ASSIGN_OR_RETURN(double v, AsNumber(json[i], absl::StrCat(what, "[", i, "]")));
    out.push_back(v);
  }
  return out;
}

template <typename T>
absl::StatusOr<std::vector<T>> AsIntegers(const Json& json,
                                          const std::string& what) {
  if (!json.is_array()) {
    return Malformed(absl::StrCat(what, " should be an array."));
  }
  std::vector<T> out;
  out.reserve(json.size());
  for (size_t i = 0; i < json.size(); ++i) {
    ASSIGN_OR_RETURN(int64_t v,
                     AsInteger(json[i], absl::StrCat(what, "[", i, "]")));
    if (v < std::numeric_limits<T>::min() || v > std::numeric_limits<T>::max()) {
      return Malformed(absl::StrCat(what, "[", i, "] is out of range."));
    }
    out.push_back(static_cast<T>(v));
  }
  return out;
}

absl::StatusOr<std::vector<std::vector<double>>> AsMatrix(
    const Json& json, const std::string& what) {
  if (!json.is_array()) {
    return Malformed(absl::StrCat(what, " should be an array of rows."));
  }
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < json.size(); ++i) {
    ASSIGN_OR_RETURN(std::vector<double> row,
                     AsNumbers(json[i], absl::StrCat(what, "[", i, "]")));
    rows.push_back(std::move(row));
  }
  return rows;
}

// 1-based line of byte offset `byte` in `text`.
int64_t LineOf(const std::string& text, size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + std::count(text.begin(), text.begin() + byte, '\n');
}

}  // namespace

absl::Status Annotate(const absl::Status& status, const std::string& where) {
  if (status.ok()) return status;
  return absl::Status(status.code(),
                      absl::StrCat(where, ": ", status.message()));
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat(path, ": cannot open."));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return absl::DataLossError(absl::StrCat(path, ": read failed."));
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat(path, ": cannot open for writing."));
  }
  out << contents;
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat(path, ": write failed."));
  return absl::OkStatus();
}

absl::StatusOr<Json> ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    return Malformed(absl::StrCat("line ", LineOf(text, e.byte > 0 ? e.byte - 1 : 0),
                                  ": invalid JSON (", e.what(), ")."));
  }
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

Json DomainToJson(const Domain& domain) {
  if (const GridDomain* g = std::get_if<GridDomain>(&domain)) {
    return Json{{"kind", "grid"}, {"a", g->a()}, {"b", g->b()},
                {"gamma", g->gamma()}};
  }
  const MetricDomain& m = std::get<MetricDomain>(domain);
  return Json{{"kind", "metric"}, {"id", m.id}, {"size", m.size}};
}

absl::StatusOr<Domain> DomainFromJson(const Json& json) {
  ASSIGN_OR_RETURN(const Json* kind_json, Field(json, "kind"));
  ASSIGN_OR_RETURN(std::string kind, AsString(*kind_json, "domain.kind"));
  if (kind == "grid") {
    ASSIGN_OR_RETURN(const Json* a, Field(json, "a"));
    ASSIGN_OR_RETURN(const Json* b, Field(json, "b"));
    ASSIGN_OR_RETURN(const Json* gamma, Field(json, "gamma"));
    ASSIGN_OR_RETURN(double av, AsNumber(*a, "domain.a"));
    ASSIGN_OR_RETURN(double bv, AsNumber(*b, "domain.b"));
    ASSIGN_OR_RETURN(double gv, AsNumber(*gamma, "domain.gamma"));
    ASSIGN_OR_RETURN(GridDomain grid, GridDomain::Create(av, bv, gv));
    return Domain(grid);
  }
  if (kind == "metric") {
    ASSIGN_OR_RETURN(const Json* id, Field(json, "id"));
    ASSIGN_OR_RETURN(const Json* size, Field(json, "size"));
    ASSIGN_OR_RETURN(std::string idv, AsString(*id, "domain.id"));
    ASSIGN_OR_RETURN(int64_t sv, AsInteger(*size, "domain.size"));
    if (sv < 1) return absl::InvalidArgumentError("domain.size should be >= 1.");
    return Domain(MetricDomain{idv, sv});
  }
  return Malformed(absl::StrCat("unknown domain kind '", kind, "'."));
}

Json DistributionToJson(const DiscreteDistribution& p) {
  return Json{{"domain", DomainToJson(p.domain())}, {"weights", p.weights()}};
}

absl::StatusOr<DiscreteDistribution> DistributionFromJson(const Json& json) {
  ASSIGN_OR_RETURN(const Json* domain_json, Field(json, "domain"));
  ASSIGN_OR_RETURN(Domain domain, DomainFromJson(*domain_json));
  ASSIGN_OR_RETURN(const Json* weights_json, Field(json, "weights"));
  ASSIGN_OR_RETURN(std::vector<double> weights,
                   AsNumbers(*weights_json, "weights"));
  return DiscreteDistribution::Create(std::move(domain), std::move(weights));
}

Json MetricToJson(const FiniteMetric& metric) {
  std::vector<std::vector<double>> dist(metric.size(),
                                        std::vector<double>(metric.size()));
  for (int64_t i = 0; i < metric.size(); ++i) {
    for (int64_t j = 0; j < metric.size(); ++j) dist[i][j] = metric.distance(i, j);
  }
  return Json{{"id", metric.id()}, {"labels", metric.labels()}, {"dist", dist}};
}

absl::StatusOr<FiniteMetric> MetricFromJson(const Json& json) {
  if (!json.is_object()) return Malformed("metric should be a JSON object.");
  std::string id = "metric";
  if (json.contains("id")) {
    ASSIGN_OR_RETURN(id, AsString(json["id"], "id"));
  }
  if (json.contains("points")) {
    ASSIGN_OR_RETURN(std::vector<std::vector<double>> points,
                     AsMatrix(json["points"], "points"));
    return FiniteMetric::FromPoints(id, points);
  }
  ASSIGN_OR_RETURN(const Json* dist_json, Field(json, "dist"));
  ASSIGN_OR_RETURN(std::vector<std::vector<double>> dist,
                   AsMatrix(*dist_json, "dist"));
  std::vector<std::string> labels;
  if (json.contains("labels")) {
    const Json& l = json["labels"];
    if (!l.is_array()) return Malformed("labels should be an array.");
    for (size_t i = 0; i < l.size(); ++i) {
      ASSIGN_OR_RETURN(std::string s, AsString(l[i], absl::StrCat("labels[", i, "]")));
      labels.push_back(std::move(s));
    }
  } else {
    for (size_t i = 0; i < dist.size(); ++i) labels.push_back(absl::StrCat(i));
  }
  return FiniteMetric::Create(id, std::move(labels), std::move(dist));
}

Json HstToJson(const Hst& hst) {
  std::vector<double> weights;
  for (int l = 1; l <= hst.depth(); ++l) weights.push_back(hst.edge_weight(l));
  return Json{{"top_weight", hst.top_weight()},
              {"depth", hst.depth()},
              {"edge_weights", weights},
              {"parents", hst.Parents()},
              {"node_points", hst.NodePoints()},
              {"point_domain",
               Json{{"id", hst.point_domain().id},
                    {"size", hst.point_domain().size}}}};
}

absl::StatusOr<Hst> HstFromJson(const Json& json) {
  ASSIGN_OR_RETURN(const Json* top, Field(json, "top_weight"));
  ASSIGN_OR_RETURN(double top_weight, AsNumber(*top, "top_weight"));
  ASSIGN_OR_RETURN(const Json* parents_json, Field(json, "parents"));
  ASSIGN_OR_RETURN(std::vector<int32_t> parents,
                   AsIntegers<int32_t>(*parents_json, "parents"));
  ASSIGN_OR_RETURN(const Json* points_json, Field(json, "node_points"));
  ASSIGN_OR_RETURN(std::vector<int64_t> points,
                   AsIntegers<int64_t>(*points_json, "node_points"));
  ASSIGN_OR_RETURN(const Json* domain_json, Field(json, "point_domain"));
  ASSIGN_OR_RETURN(const Json* id, Field(*domain_json, "id"));
  ASSIGN_OR_RETURN(const Json* size, Field(*domain_json, "size"));
  ASSIGN_OR_RETURN(std::string idv, AsString(*id, "point_domain.id"));
  ASSIGN_OR_RETURN(int64_t sv, AsInteger(*size, "point_domain.size"));
  return Hst::Create(top_weight, parents, points, MetricDomain{idv, sv});
}

Json EpsilonToJson(double epsilon) {
  if (std::isinf(epsilon)) return "inf";
  return epsilon;
}

Json LedgerToJson(const PrivacyLedger& ledger) {
  Json entries = Json::array();
  for (const LedgerEntry& e : ledger.entries()) {
    entries.push_back(Json{{"mechanism", e.mechanism},
                           {"epsilon", EpsilonToJson(e.epsilon)},
                           {"delta", e.delta},
                           {"detail", e.detail}});
  }
  return Json{{"entries", entries},
              {"total_epsilon", EpsilonToJson(ledger.total_epsilon())},
              {"total_delta", ledger.total_delta()}};
}

absl::StatusOr<DiscreteDistribution> LoadDistribution(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return Annotate(json.status(), path);
  absl::StatusOr<DiscreteDistribution> p = DistributionFromJson(*json);
  if (!p.ok()) return Annotate(p.status(), path);
  return p;
}

absl::StatusOr<FiniteMetric> LoadMetric(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return Annotate(json.status(), path);
  absl::StatusOr<FiniteMetric> m = MetricFromJson(*json);
  if (!m.ok()) return Annotate(m.status(), path);
  return m;
}

absl::StatusOr<Hst> LoadHst(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return Annotate(json.status(), path);
  absl::StatusOr<Hst> h = HstFromJson(*json);
  if (!h.ok()) return Annotate(h.status(), path);
  return h;
}

absl::StatusOr<std::vector<std::vector<double>>> ParsePointCsv(
    const std::string& text, int dimension) {
  if (dimension < 1) {
    return absl::InvalidArgumentError("dimension should be at least 1.");
  }
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int64_t number = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    bool parsed = true;
    size_t field_begin = 0;
    while (parsed) {
      size_t field_end = line.find(',', field_begin);
      if (field_end == std::string::npos) field_end = line.size();
      const size_t b = line.find_first_not_of(" \t\r", field_begin);
      const size_t e = line.find_last_not_of(" \t\r", field_end - 1);
      if (b == std::string::npos || b >= field_end || e < b) {
        parsed = false;
        break;
      }
      const char* first = line.data() + b;
      const char* last = line.data() + e + 1;
      if (*first == '+') ++first;
      double value = 0;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      parsed = ec == std::errc() && ptr == last;
      if (parsed) row.push_back(value);
      if (field_end == line.size()) break;
      field_begin = field_end + 1;
    }
    if (!parsed) {
      if (!seen_content) {
        seen_content = true;  // header
        continue;
      }
      return Malformed(absl::StrCat("line ", number, ": not a list of numbers."));
    }
    seen_content = true;
    if (static_cast<int>(row.size()) != dimension) {
      return Malformed(absl::StrCat("line ", number, ": expected ", dimension,
                                    " values, found ", row.size(), "."));
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", number, ": value is not finite."));
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return absl::InvalidArgumentError("no samples found.");
  return rows;
}

absl::StatusOr<std::vector<double>> ParseSampleCsv(const std::string& text) {
  ASSIGN_OR_RETURN(std::vector<std::vector<double>> rows,
                   ParsePointCsv(text, 1));
  std::vector<double> values;
  values.reserve(rows.size());
  for (const std::vector<double>& row : rows) values.push_back(row[0]);
  return values;
}

absl::StatusOr<std::vector<std::vector<double>>> LoadPointCsv(
    const std::string& path, int dimension) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<std::vector<std::vector<double>>> rows =
      ParsePointCsv(text, dimension);
  if (!rows.ok()) return Annotate(rows.status(), path);
  return rows;
}

absl::StatusOr<std::vector<double>> LoadSampleCsv(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<std::vector<double>> values = ParseSampleCsv(text);
  if (!values.ok()) return Annotate(values.status(), path);
  return values;
}

}  // namespace wassdp
