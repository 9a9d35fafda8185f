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

// Command-line front end. Exit codes: 0 success, 2 invalid arguments or
// values, 3 unreadable or malformed files.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "wassdp/adversarial.h"
#include "wassdp/distribution.h"
#include "wassdp/embedding.h"
#include "wassdp/experiment.h"
#include "wassdp/finite_metric.h"
#include "wassdp/hst.h"
#include "wassdp/io.h"
#include "wassdp/onedim.h"
#include "wassdp/private_cdf.h"
#include "wassdp/rng.h"
#include "wassdp/status_macros.h"
#include "wassdp/tree_estimator.h"
#include "wassdp/wasserstein.h"

namespace wassdp {
namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

// Settings shared by every command. Flags win over WASSDP_* variables,
// which win over the defaults below.
struct Common {
  uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
  int64_t trials = 50;
  int jobs = 1;
  double beta = 0.05;
  double c2 = 1.0;
  double c3 = 1.0;
  double rate_constant = 1.0;
  double cdf_error_constant = 1.0;
};

void AddCommon(CLI::App* cmd, Common* c) {
  cmd->add_option("--seed", c->seed, "Random seed")->envname("WASSDP_SEED");
  cmd->add_option("--out", c->out, "Output path (default stdout)")
      ->envname("WASSDP_OUT");
  cmd->add_option("--format", c->format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("WASSDP_FORMAT");
  cmd->add_option("--trials", c->trials, "Monte Carlo trials")
      ->envname("WASSDP_TRIALS");
  cmd->add_option("--jobs", c->jobs, "Worker threads")->envname("WASSDP_JOBS");
  cmd->add_option("--beta", c->beta, "Failure probability")
      ->envname("WASSDP_BETA");
  cmd->add_option("--c2", c->c2, "Sample threshold constant")
      ->envname("WASSDP_C2");
  cmd->add_option("--c3", c->c3, "Quantile count constant")
      ->envname("WASSDP_C3");
  cmd->add_option("--rate-constant", c->rate_constant,
                  "Constant C of the 1-d target rate")
      ->envname("WASSDP_RATE_CONSTANT");
  cmd->add_option("--cdf-error-constant", c->cdf_error_constant,
                  "Constant of the reported CDF error bound")
      ->envname("WASSDP_CDF_ERROR_CONSTANT");
}

absl::StatusOr<double> ParseEpsilon(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    RETURN_IF_ERROR(ValidateEpsilon(v));
    return v;
  } catch (const std::exception&) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon '", text, "' is not a number or 'inf'."));
  }
}

absl::Status Emit(const Common& c, const Json& json, const std::string& csv) {
  const std::string text = c.format == "json" ? DumpJson(json) : csv;
  if (c.out.empty()) {
    std::cout << text;
    return absl::OkStatus();
  }
  return WriteFile(c.out, text);
}

Json NumberOrString(double v) { return EpsilonToJson(v); }

std::string Num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

std::string DistributionCsv(const DiscreteDistribution& p) {
  std::string csv = "index,point,weight\n";
  const GridDomain* grid = p.grid();
  for (int64_t i = 0; i < p.size(); ++i) {
    if (p.weight(i) == 0) continue;
    absl::StrAppend(&csv, i, ",",
                    grid != nullptr ? Num(grid->point(i)) : absl::StrCat(i),
                    ",", Num(p.weight(i)), "\n");
  }
  return csv;
}

// Accepts a distribution file or any report carrying one under "estimate".
absl::StatusOr<DiscreteDistribution> LoadDistributionOrEstimate(
    const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return Annotate(json.status(), path);
  const Json& body =
      json->is_object() && json->contains("estimate") ? (*json)["estimate"]
                                                      : *json;
  absl::StatusOr<DiscreteDistribution> p = DistributionFromJson(body);
  if (!p.ok()) return Annotate(p.status(), path);
  return p;
}

absl::StatusOr<GridDomain> GridFromFlags(double a, double b, double gamma) {
  return GridDomain::Create(a, b, gamma);
}

// Sample values on a grid, or point indices of a metric.
absl::StatusOr<Dataset> LoadSamples(const std::string& path,
                                    const Domain& domain) {
  ASSIGN_OR_RETURN(std::vector<double> values, LoadSampleCsv(path));
  if (const GridDomain* grid = std::get_if<GridDomain>(&domain)) {
    absl::StatusOr<Dataset> data = DiscretizeValues(*grid, values);
    if (!data.ok()) return Annotate(data.status(), path);
    return data;
  }
  std::vector<int64_t> samples;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] != std::floor(values[i])) {
      return absl::DataLossError(absl::StrCat(
          path, ": sample ", i + 1, " is not an integer point index."));
    }
    samples.push_back(static_cast<int64_t>(values[i]));
  }
  absl::StatusOr<Dataset> data = MakeDataset(domain, std::move(samples));
  if (!data.ok()) return Annotate(data.status(), path);
  return data;
}

struct TreeSetup {
  FiniteMetric metric;
  Hst hst;
};

// Metric from --metric, else the grid's own metric; tree from --hst, else a
// fresh embedding drawn from the seed.
absl::StatusOr<TreeSetup> SetUpTree(const std::string& metric_path,
                                    const std::string& hst_path,
                                    const GridDomain* grid, uint64_t seed) {
  std::optional<FiniteMetric> metric;
  if (!metric_path.empty()) {
    ASSIGN_OR_RETURN(metric, LoadMetric(metric_path));
  } else if (grid != nullptr) {
    ASSIGN_OR_RETURN(metric, FiniteMetric::FromGrid(*grid));
  } else {
    return absl::InvalidArgumentError("--metric is required off the grid.");
  }
  if (!hst_path.empty()) {
    ASSIGN_OR_RETURN(Hst hst, LoadHst(hst_path));
    if (hst.point_domain() != metric->domain()) {
      return absl::InvalidArgumentError(
          "the tree's points do not match the metric.");
    }
    return TreeSetup{*std::move(metric), std::move(hst)};
  }
  Rng rng(seed);
  ASSIGN_OR_RETURN(Hst hst, BuildFrtEmbedding(*metric, rng));
  return TreeSetup{*std::move(metric), std::move(hst)};
}

// Moves a distribution onto the metric's domain, which for the grid metric
// has the same indices.
absl::StatusOr<DiscreteDistribution> OnMetric(const DiscreteDistribution& p,
                                              const FiniteMetric& metric) {
  if (p.domain() == Domain(metric.domain())) return p;
  if (p.grid() != nullptr && p.size() == metric.size()) {
    return DiscreteDistribution::Create(metric.domain(), p.weights());
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "distribution on ", DescribeDomain(p.domain()),
      " does not live on metric '", metric.id(), "'."));
}

Json RateTermsJson(const DiscreteRateReport& r) {
  return Json{{"statistical", r.statistical_term},
              {"inactive", r.inactive_term},
              {"active", r.active_term},
              {"total", r.total()}};
}

std::string CdfSvg(const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& cdfs,
                   const GridDomain& grid, int64_t lo, int64_t hi) {
  const double width = 640;
  const double height = 400;
  const double margin = 40;
  auto sx = [&](double x) {
    return margin + (x - grid.point(lo)) /
                        (grid.point(hi) - grid.point(lo)) * (width - 2 * margin);
  };
  auto sy = [&](double y) { return height - margin - y * (height - 2 * margin); };
  const char* colors[] = {"#000000", "#d62728", "#1f77b4"};
  std::string svg = absl::StrCat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"", width,
      "\" height=\"", height, "\">\n<rect width=\"100%\" height=\"100%\" ",
      "fill=\"white\"/>\n");
  absl::StrAppend(&svg, "<line x1=\"", margin, "\" y1=\"", sy(0), "\" x2=\"",
                  width - margin, "\" y2=\"", sy(0),
                  "\" stroke=\"#888\"/>\n<line x1=\"", margin, "\" y1=\"",
                  sy(0), "\" x2=\"", margin, "\" y2=\"", sy(1),
                  "\" stroke=\"#888\"/>\n");
  absl::StrAppend(&svg, "<text x=\"", margin, "\" y=\"", height - 10,
                  "\" font-size=\"12\">", Num(grid.point(lo)),
                  "</text>\n<text x=\"", width - margin - 30, "\" y=\"",
                  height - 10, "\" font-size=\"12\">", Num(grid.point(hi)),
                  "</text>\n");
  for (size_t c = 0; c < cdfs.size(); ++c) {
    std::string points;
    double prev = lo > 0 ? cdfs[c][lo - 1] : 0.0;
    absl::StrAppend(&points, sx(grid.point(lo)), ",", sy(prev), " ");
    for (int64_t i = lo; i <= hi; ++i) {
      const double x = sx(grid.point(i));
      absl::StrAppend(&points, x, ",", sy(prev), " ", x, ",", sy(cdfs[c][i]),
                      " ");
      prev = cdfs[c][i];
    }
    absl::StrAppend(&svg, "<polyline fill=\"none\" stroke=\"", colors[c % 3],
                    "\" stroke-width=\"1.5\" points=\"", points, "\"/>\n");
    absl::StrAppend(&svg, "<text x=\"", margin + 10, "\" y=\"",
                    margin + 16 * static_cast<double>(c), "\" fill=\"",
                    colors[c % 3], "\" font-size=\"12\">", names[c],
                    "</text>\n");
  }
  svg += "</svg>\n";
  return svg;
}

int ExitCode(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 0;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kPermissionDenied:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Private distribution estimation in Wasserstein distance"};
  app.require_subcommand(1);
  Common common;
  std::function<absl::Status()> action;

  // Shared inputs.
  std::string input;
  std::string metric_path;
  std::string hst_path;
  std::string epsilon_text = "1";
  double delta = 0.0;
  double a = 0;
  double b = 999;
  double gamma = 1;
  int64_t n = 1000;

  // estimate-1d
  auto* est1 = app.add_subcommand("estimate-1d",
                                  "Private 1-d estimate from CSV samples");
  AddCommon(est1, &common);
  std::optional<int64_t> k_override;
  std::string ledger_1d;
  est1->add_option("--input", input, "CSV samples")->required();
  est1->add_option("--a", a, "Grid start");
  est1->add_option("--b", b, "Grid end");
  est1->add_option("--gamma", gamma, "Grid spacing");
  est1->add_option("--ledger", ledger_1d, "Also write the ledger here");
  est1->add_option("--epsilon,--eps", epsilon_text, "Privacy budget or inf")
      ->envname("WASSDP_EPSILON");
  est1->add_option("--k", k_override, "Number of quantiles");
  est1->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(double eps, ParseEpsilon(epsilon_text));
      ASSIGN_OR_RETURN(GridDomain grid, GridFromFlags(a, b, gamma));
      ASSIGN_OR_RETURN(Dataset data, LoadSamples(input, grid));
      Estimate1dOptions options;
      options.beta = common.beta;
      options.c2 = common.c2;
      options.c3 = common.c3;
      options.k_override = k_override;
      Rng rng(common.seed);
      PrivacyLedger ledger;
      ASSIGN_OR_RETURN(Estimate1dResult r,
                       Estimate1d(data, grid, eps, rng, options, &ledger));
      std::vector<double> points;
      for (int64_t q : r.quantiles) points.push_back(grid.point(q));
      const double range = (grid.b() - grid.a()) / grid.gamma();
      const double l = std::log(range / common.beta);
      const double bound =
          std::isinf(eps) ? 0.0
                          : common.cdf_error_constant * l * l * l /
                                (eps * static_cast<double>(data.n()));
      Json report{{"command", "estimate-1d"},
                  {"seed", common.seed},
                  {"n", data.n()},
                  {"epsilon", NumberOrString(eps)},
                  {"k", r.k},
                  {"k_suggested", r.choice.k},
                  {"below_sample_threshold", r.choice.below_sample_threshold},
                  {"quantiles", points},
                  {"cdf_error_bound", bound},
                  {"estimate", DistributionToJson(r.distribution)},
                  {"ledger", LedgerToJson(ledger)}};
      if (!ledger_1d.empty()) {
        RETURN_IF_ERROR(WriteFile(ledger_1d, DumpJson(LedgerToJson(ledger))));
      }
      return Emit(common, report, DistributionCsv(r.distribution));
    };
  });

  // estimate-tree
  auto* estt = app.add_subcommand(
      "estimate-tree", "Private estimate on a finite metric via a tree");
  AddCommon(estt, &common);
  bool on_line = false;
  std::string cube;
  std::string ledger_out;
  estt->add_option("--input", input,
                   "CSV samples: point indices with --metric, values with "
                   "--line, d coordinates per row with --grid")
      ->required();
  estt->add_option("--metric", metric_path, "Metric JSON");
  estt->add_option("--hst", hst_path, "Tree JSON (default: embed the metric)");
  estt->add_flag("--line", on_line, "Samples are values on the grid a..b");
  estt->add_option("--grid", cube, "d,alpha: dyadic tree over [0,1]^d");
  estt->add_option("--a", a, "Grid start");
  estt->add_option("--b", b, "Grid end");
  estt->add_option("--gamma", gamma, "Grid spacing");
  estt->add_option("--epsilon,--eps", epsilon_text, "Privacy budget or inf")
      ->envname("WASSDP_EPSILON");
  estt->add_option("--delta", delta, "Approximate DP slack (kappa only)")
      ->envname("WASSDP_DELTA");
  estt->add_option("--ledger", ledger_out, "Also write the ledger here");
  estt->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(double eps, ParseEpsilon(epsilon_text));
      TreeEstimatorOptions options;
      options.beta = common.beta;
      options.delta = delta;
      Json report{{"command", "estimate-tree"},
                  {"seed", common.seed},
                  {"epsilon", NumberOrString(eps)}};
      std::optional<TreeEstimate> r;
      int depth = 0;
      Rng rng = Rng(common.seed).Split(1);
      if (!cube.empty()) {
        int dim = 0;
        double alpha = 0;
        char comma = 0;
        std::istringstream spec(cube);
        if (!(spec >> dim >> comma >> alpha) || comma != ',' || !spec.eof()) {
          return absl::InvalidArgumentError("--grid expects 'd,alpha'.");
        }
        Rng embed_rng(common.seed);
        ASSIGN_OR_RETURN(GridEmbedding g,
                         GridEmbedding::Create(dim, alpha, embed_rng));
        ASSIGN_OR_RETURN(std::vector<std::vector<double>> rows,
                         LoadPointCsv(input, dim));
        std::vector<int64_t> samples;
        for (size_t i = 0; i < rows.size(); ++i) {
          absl::StatusOr<int64_t> leaf = g.PointOf(rows[i]);
          if (!leaf.ok()) {
            return Annotate(leaf.status(), absl::StrCat(input, ": row ", i + 1));
          }
          samples.push_back(*leaf);
        }
        const Dataset data{g.hst().point_domain(), std::move(samples)};
        ASSIGN_OR_RETURN(r, PrivDensityEstTree(data, g.hst(), eps, rng, options));
        depth = g.hst().depth();
        Json cells = Json::array();
        for (int64_t x : r->distribution.Support()) {
          cells.push_back(Json{{"point", x},
                               {"center", g.representative(x)},
                               {"weight", r->distribution.weight(x)}});
        }
        report["cells"] = cells;
        report["n"] = data.n();
      } else {
        std::optional<GridDomain> grid;
        if (on_line || metric_path.empty()) {
          ASSIGN_OR_RETURN(grid, GridFromFlags(a, b, gamma));
        }
        ASSIGN_OR_RETURN(TreeSetup setup,
                         SetUpTree(metric_path, hst_path,
                                   grid ? &*grid : nullptr, common.seed));
        // Grid samples keep their indices on the grid's own metric.
        ASSIGN_OR_RETURN(Dataset loaded,
                         grid ? LoadSamples(input, *grid)
                              : LoadSamples(input, setup.metric.domain()));
        const Dataset data{setup.metric.domain(), std::move(loaded.samples)};
        ASSIGN_OR_RETURN(r, PrivDensityEstTree(data, setup.hst, eps, rng,
                                               options));
        depth = setup.hst.depth();
        report["n"] = data.n();
      }
      report["depth"] = depth;
      report["active_nodes"] = r->active.size();
      report["estimate"] = DistributionToJson(r->distribution);
      report["ledger"] = LedgerToJson(r->ledger);
      if (!ledger_out.empty()) {
        RETURN_IF_ERROR(WriteFile(ledger_out, DumpJson(report["ledger"])));
      }
      return Emit(common, report, DistributionCsv(r->distribution));
    };
  });

  // rate-1d
  auto* rate1 = app.add_subcommand("rate-1d", "1-d target estimation rate");
  AddCommon(rate1, &common);
  rate1->add_option("--input", input, "Distribution JSON")->required();
  rate1->add_option("--n", n, "Sample size");
  rate1->add_option("--epsilon,--eps", epsilon_text, "Privacy budget or inf")
      ->envname("WASSDP_EPSILON");
  rate1->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(double eps, ParseEpsilon(epsilon_text));
      ASSIGN_OR_RETURN(DiscreteDistribution p, LoadDistribution(input));
      Rng rng(common.seed);
      ASSIGN_OR_RETURN(Rate1dReport r,
                       TargetRate1d(p, n, eps, common.rate_constant,
                                    common.trials, rng, common.jobs));
      ASSIGN_OR_RETURN(BobkovLedouxReport bl, BobkovLedouxRate(p, n));
      Json report{{"command", "rate-1d"},
                  {"seed", common.seed},
                  {"n", n},
                  {"epsilon", NumberOrString(eps)},
                  {"interquantile_term", r.interquantile_term},
                  {"tail_term", r.tail_term},
                  {"empirical_term", r.empirical_term},
                  {"total", r.total()},
                  {"q_low", r.q_low},
                  {"q_high", r.q_high},
                  {"non_private",
                   Json{{"a_n", bl.a_n}, {"b_n", bl.b_n}, {"total", bl.total()}}}};
      const std::string csv = absl::StrCat(
          "term,value\ninterquantile,", Num(r.interquantile_term), "\ntail,",
          Num(r.tail_term), "\nempirical,", Num(r.empirical_term), "\ntotal,",
          Num(r.total()), "\n");
      return Emit(common, report, csv);
    };
  });

  // rate-tree
  auto* ratet = app.add_subcommand("rate-tree",
                                   "Per-level target rate on a tree");
  AddCommon(ratet, &common);
  ratet->add_option("--input", input, "Distribution JSON")->required();
  ratet->add_option("--metric", metric_path, "Metric JSON");
  ratet->add_option("--hst", hst_path, "Tree JSON (default: embed)");
  ratet->add_option("--n", n, "Sample size");
  ratet->add_option("--epsilon,--eps", epsilon_text, "Privacy budget or inf")
      ->envname("WASSDP_EPSILON");
  ratet->add_option("--delta", delta, "Approximate DP slack")
      ->envname("WASSDP_DELTA");
  ratet->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(double eps, ParseEpsilon(epsilon_text));
      ASSIGN_OR_RETURN(DiscreteDistribution p, LoadDistribution(input));
      ASSIGN_OR_RETURN(TreeSetup setup,
                       SetUpTree(metric_path, hst_path, p.grid(), common.seed));
      ASSIGN_OR_RETURN(DiscreteDistribution pm, OnMetric(p, setup.metric));
      ASSIGN_OR_RETURN(TreeRateReport r,
                       TargetRateTree(pm, setup.hst, n, eps, delta));
      ASSIGN_OR_RETURN(TreeUpperBoundReport ub,
                       TreeUpperBound(pm, setup.hst, n, eps, common.beta));
      Json levels = Json::array();
      std::string csv = "level,weight,statistical,inactive,active,value\n";
      for (const LevelRate& l : r.levels) {
        Json entry = RateTermsJson(l.terms);
        entry["level"] = l.level;
        entry["weight"] = l.weight;
        entry["value"] = l.value;
        levels.push_back(entry);
        absl::StrAppend(&csv, l.level, ",", Num(l.weight), ",",
                        Num(l.terms.statistical_term), ",",
                        Num(l.terms.inactive_term), ",",
                        Num(l.terms.active_term), ",", Num(l.value), "\n");
      }
      Json report{{"command", "rate-tree"},
                  {"seed", common.seed},
                  {"n", n},
                  {"epsilon", NumberOrString(eps)},
                  {"depth", setup.hst.depth()},
                  {"levels", levels},
                  {"max", r.max},
                  {"sum", r.sum},
                  {"upper_bound",
                   Json{{"statistical", ub.statistical_term},
                        {"inactive", ub.inactive_term},
                        {"active", ub.active_term},
                        {"total", ub.total()}}}};
      return Emit(common, report, csv);
    };
  });

  // w1
  auto* w1 = app.add_subcommand("w1", "W1 distance between two distributions");
  AddCommon(w1, &common);
  std::string first;
  std::string second;
  w1->add_option("first", first, "Distribution JSON or CSV samples")->required();
  w1->add_option("second", second, "Distribution JSON or CSV samples")
      ->required();
  w1->add_option("--metric", metric_path, "Metric JSON for metric domains");
  w1->callback([&] {
    action = [&]() -> absl::Status {
      auto is_csv = [](const std::string& path) {
        return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
      };
      if (is_csv(first) && is_csv(second)) {
        return absl::InvalidArgumentError(
            "at least one input must be a distribution JSON.");
      }
      const bool swap = is_csv(first);
      ASSIGN_OR_RETURN(DiscreteDistribution p,
                       LoadDistributionOrEstimate(swap ? second : first));
      std::optional<DiscreteDistribution> q;
      const std::string& other = swap ? first : second;
      if (is_csv(other)) {
        ASSIGN_OR_RETURN(Dataset data, LoadSamples(other, p.domain()));
        ASSIGN_OR_RETURN(q, EmpiricalDistribution(data, p.domain()));
      } else {
        ASSIGN_OR_RETURN(q, LoadDistributionOrEstimate(other));
      }
      double value = 0;
      const std::string evaluator = p.is_ordered() ? "cdf" : "exact";
      if (p.is_ordered()) {
        ASSIGN_OR_RETURN(value, W1Cdf(p, *q));
      } else {
        if (metric_path.empty()) {
          return absl::InvalidArgumentError(
              "--metric is required for metric domains.");
        }
        ASSIGN_OR_RETURN(FiniteMetric metric, LoadMetric(metric_path));
        ASSIGN_OR_RETURN(value, W1Exact(p, *q, metric));
      }
      return Emit(common, Json{{"command", "w1"}, {"w1", value}, {"evaluator", evaluator}},
                  absl::StrCat(Num(value), "\n"));
    };
  });

  // embed
  auto* embed = app.add_subcommand("embed", "Tree embedding of a metric");
  AddCommon(embed, &common);
  int dimension = 0;
  double alpha = 0.1;
  bool no_shift = false;
  embed->add_option("--metric", metric_path, "Metric JSON (FRT embedding)");
  embed->add_option("--dimension", dimension,
                    "Dyadic embedding of [0,1]^d instead");
  embed->add_option("--alpha", alpha, "Leaf side bound for --dimension");
  embed->add_flag("--no-shift", no_shift, "Unshifted dyadic cells");
  embed->callback([&] {
    action = [&]() -> absl::Status {
      Rng rng(common.seed);
      std::optional<Hst> hst;
      if (dimension > 0) {
        ASSIGN_OR_RETURN(GridEmbedding g,
                         GridEmbedding::Create(dimension, alpha, rng, !no_shift));
        hst = g.hst();
      } else if (!metric_path.empty()) {
        ASSIGN_OR_RETURN(FiniteMetric metric, LoadMetric(metric_path));
        ASSIGN_OR_RETURN(hst, BuildFrtEmbedding(metric, rng));
      } else {
        return absl::InvalidArgumentError("give --metric or --dimension.");
      }
      std::string csv = "node,parent,level,point\n";
      for (int32_t v = 0; v < hst->num_nodes(); ++v) {
        const Hst::Node& node = hst->node(v);
        absl::StrAppend(&csv, v, ",", node.parent, ",", node.level, ",",
                        node.point, "\n");
      }
      return Emit(common, HstToJson(*hst), csv);
    };
  });

  // neighbor
  auto* neighbor = app.add_subcommand("neighbor", "Hard neighbor of a 1-d P");
  AddCommon(neighbor, &common);
  std::string kind = "priv";
  int64_t k = 10;
  neighbor->add_option("--kind", kind, "priv or emp")
      ->check(CLI::IsMember({"priv", "emp"}));
  neighbor->add_option("--input", input, "Distribution JSON")->required();
  neighbor->add_option("--k", k, "Quantile count for priv");
  neighbor->add_option("--n", n, "Sample size for emp");
  neighbor->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(DiscreteDistribution p, LoadDistribution(input));
      ASSIGN_OR_RETURN(Neighbor q, kind == "priv"
                                       ? HardPrivacyNeighbor1d(p, k)
                                       : HardEmpiricalNeighbor1d(p, n));
      if (q.degenerate) std::cerr << "note: degenerate input, Q = P\n";
      std::string csv = "index,p,q\n";
      for (int64_t i = 0; i < p.size(); ++i) {
        if (p.weight(i) == 0 && q.distribution.weight(i) == 0) continue;
        absl::StrAppend(&csv, i, ",", Num(p.weight(i)), ",",
                        Num(q.distribution.weight(i)), "\n");
      }
      return Emit(common, DistributionToJson(q.distribution), csv);
    };
  });

  // regret
  auto* regret = app.add_subcommand("regret",
                                    "Measured error against the target rate");
  AddCommon(regret, &common);
  std::string estimator = "1d";
  std::string csv_out;
  int64_t buckets = 40;
  regret->add_option("--estimator", estimator, "1d, tree or psmm")
      ->check(CLI::IsMember({"1d", "tree", "psmm"}));
  regret->add_option("--input", input, "Distribution JSON")->required();
  regret->add_option("--metric", metric_path, "Metric JSON off the grid");
  regret->add_option("--n", n, "Sample size");
  regret->add_option("--epsilon,--eps", epsilon_text, "Privacy budget or inf")
      ->envname("WASSDP_EPSILON");
  regret->add_option("--delta", delta, "Approximate DP slack")
      ->envname("WASSDP_DELTA");
  regret->add_option("--buckets", buckets, "Baseline bucket count");
  regret->add_option("--csv-out", csv_out, "Per-trial errors as CSV");
  regret->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(double eps, ParseEpsilon(epsilon_text));
      ASSIGN_OR_RETURN(DiscreteDistribution p, LoadDistribution(input));
      ASSIGN_OR_RETURN(EstimatorKind e, ParseEstimatorKind(estimator));
      std::optional<FiniteMetric> metric;
      if (!metric_path.empty()) {
        ASSIGN_OR_RETURN(metric, LoadMetric(metric_path));
      }
      RegretOptions options;
      options.beta = common.beta;
      options.delta = delta;
      options.c2 = common.c2;
      options.c3 = common.c3;
      options.rate_constant = common.rate_constant;
      options.psmm_buckets = buckets;
      options.jobs = common.jobs;
      Rng rng(common.seed);
      ASSIGN_OR_RETURN(RegretReportResult r,
                       RegretReport(p, e, n, eps, common.trials, rng, options,
                                    metric ? &*metric : nullptr));
      std::string csv = "trial,error\n";
      for (size_t t = 0; t < r.errors.size(); ++t) {
        absl::StrAppend(&csv, t, ",", Num(r.errors[t]), "\n");
      }
      if (!csv_out.empty()) RETURN_IF_ERROR(WriteFile(csv_out, csv));
      Json report{{"command", "regret"},
                  {"seed", common.seed},
                  {"estimator", estimator},
                  {"n", n},
                  {"epsilon", NumberOrString(eps)},
                  {"trials", common.trials},
                  {"errors", r.errors},
                  {"measured_error_median", r.measured_error_median},
                  {"target_rate", r.target_rate},
                  {"ratio", NumberOrString(r.ratio)}};
      return Emit(common, report, csv);
    };
  });

  // experiment-bimodal
  auto* bimodal = app.add_subcommand(
      "experiment-bimodal", "Two-atom benchmark: fixed buckets vs quantiles");
  AddCommon(bimodal, &common);
  BimodalConfig config;
  std::string svg_out;
  n = config.n;
  bimodal->add_option("--n", config.n, "Sample size");
  bimodal->add_option("--epsilon,--eps", epsilon_text, "Privacy budget or inf")
      ->envname("WASSDP_EPSILON");
  bimodal->add_option("--k", config.k, "Quantile count");
  bimodal->add_option("--buckets", config.buckets, "Baseline bucket count");
  bimodal->add_option("--csv-out", csv_out, "CDF curves of trial 0 as CSV");
  bimodal->add_option("--svg", svg_out, "CDF plot of trial 0 as SVG");
  bimodal->callback([&] {
    action = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(config.epsilon, ParseEpsilon(epsilon_text));
      config.trials = common.trials;
      config.jobs = common.jobs;
      Rng rng(common.seed);
      ASSIGN_OR_RETURN(BimodalResult r, RunBimodalExperiment(config, rng));
      const GridDomain& grid = *r.truth.grid();
      const std::vector<std::vector<double>> cdfs = {
          r.truth.Cdf(), r.first_psmm.Cdf(), r.first_private.Cdf()};
      std::string csv = "x,F_P,F_baseline,F_private\n";
      for (int64_t i = 0; i < grid.size(); ++i) {
        absl::StrAppend(&csv, Num(grid.point(i)), ",", Num(cdfs[0][i]), ",",
                        Num(cdfs[1][i]), ",", Num(cdfs[2][i]), "\n");
      }
      if (!csv_out.empty()) RETURN_IF_ERROR(WriteFile(csv_out, csv));
      if (!svg_out.empty()) {
        int64_t lo = grid.size() - 1;
        int64_t hi = 0;
        for (const DiscreteDistribution* d :
             {&r.truth, &r.first_psmm, &r.first_private}) {
          const std::vector<int64_t> support = d->Support();
          lo = std::min(lo, support.front());
          hi = std::max(hi, support.back());
        }
        lo = std::max<int64_t>(0, lo - 10);
        hi = std::min<int64_t>(grid.size() - 1, hi + 10);
        RETURN_IF_ERROR(WriteFile(
            svg_out, CdfSvg({"P", "baseline", "private"}, cdfs, grid, lo, hi)));
      }
      Json report{{"command", "experiment-bimodal"},
                  {"seed", common.seed},
                  {"n", config.n},
                  {"epsilon", NumberOrString(config.epsilon)},
                  {"k", config.k},
                  {"buckets", config.buckets},
                  {"trials", config.trials},
                  {"baseline_errors", r.psmm_errors},
                  {"private_errors", r.private_errors},
                  {"baseline_median", r.psmm_median},
                  {"private_median", r.private_median},
                  {"baseline_in_10_17", r.psmm_in_band}};
      return Emit(common, report, csv);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  if (common.jobs < 1 || common.trials < 1) {
    std::cerr << "error: --jobs and --trials should be at least 1.\n";
    return kExitValidation;
  }
  const absl::Status status = action();
  if (!status.ok()) {
    std::cerr << "error: " << status.message() << "\n";
  }
  return ExitCode(status);
}

}  // namespace
}  // namespace wassdp

int main(int argc, char** argv) { return wassdp::Main(argc, argv); }
