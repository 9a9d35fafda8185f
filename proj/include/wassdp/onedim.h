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

#ifndef WASSDP_ONEDIM_H_
#define WASSDP_ONEDIM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/privacy.h"
#include "wassdp/rng.h"

namespace wassdp {

struct KChoice {
  int64_t k = 1;
  // Minimum n for the accuracy guarantee, c2 ln^4((b-a)/(beta gamma eps))/eps.
  double sample_threshold = 0;
  bool below_sample_threshold = false;
};

// Number of quantiles for the 1-D estimator:
// ceil(eps n / (4 c3 ln^3((b-a)/(beta gamma)) ln(n/beta))), at least 1.
// An infinite epsilon gives k = n.
absl::StatusOr<KChoice> ChooseK(int64_t n, double epsilon,
                                const GridDomain& grid, double beta,
                                double c2 = 1.0, double c3 = 1.0);

struct Estimate1dOptions {
  double beta = 0.05;
  double c2 = 1.0;
  double c3 = 1.0;
  std::optional<int64_t> k_override;
};

struct Estimate1dResult {
  DiscreteDistribution distribution;
  KChoice choice;
  int64_t k = 1;
  // Grid indices of the k private quantiles, ascending.
  std::vector<int64_t> quantiles;
};

// Private quantiles at levels (2r - 1) / 2k, r = 1..k, each carrying mass
// 1/k. The whole budget is spent in one private CDF call.
absl::StatusOr<Estimate1dResult> Estimate1d(const Dataset& data,
                                            const GridDomain& grid,
                                            double epsilon, Rng& rng,
                                            const Estimate1dOptions& options,
                                            PrivacyLedger* ledger);

// The levels (2r - 1) / 2k for r = 1..k.
std::vector<double> MidpointLevels(int64_t k);

// Non-private fixed-partition baseline: [a, b] is cut into K equal
// intervals and each interval's empirical mass sits on its first grid point.
absl::StatusOr<DiscreteDistribution> PsmmBaseline(const Dataset& data,
                                                  const GridDomain& grid,
                                                  int64_t buckets);

struct Rate1dReport {
  double interquantile_term = 0;
  double tail_term = 0;
  double empirical_term = 0;
  // Grid indices of q_{1/(C eps n)} and q_{1 - 1/(C eps n)}.
  int64_t q_low = 0;
  int64_t q_high = 0;

  double total() const {
    return interquantile_term + tail_term + empirical_term;
  }
};

// Rate terms for P at sample size n. With tau = 1 / (C eps n):
// interquantile = tau (q_{1-tau} - q_tau), tail = W(P, P restricted to
// [q_tau, q_{1-tau}]), empirical = mean over `trials` of the restricted
// empirical error, divided by sqrt(ln n).
absl::StatusOr<Rate1dReport> TargetRate1d(const DiscreteDistribution& p,
                                          int64_t n, double epsilon, double c,
                                          int64_t trials, Rng& rng,
                                          int jobs = 1);

struct BobkovLedouxReport {
  double a_n = 0;
  double b_n = 0;
  double total() const { return a_n + b_n; }
};

// Two-sided bound on the expected empirical error E W(P, P_n):
// A_n = 2 sum over cells with F(1-F) <= 1/(4n) of F(1-F) gamma, and
// B_n = n^{-1/2} sum over cells with F(1-F) >= 1/(4n) of sqrt(F(1-F)) gamma.
absl::StatusOr<BobkovLedouxReport> BobkovLedouxRate(
    const DiscreteDistribution& p, int64_t n);

}  // namespace wassdp

#endif  // WASSDP_ONEDIM_H_
