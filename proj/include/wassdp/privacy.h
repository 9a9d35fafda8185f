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

#ifndef WASSDP_PRIVACY_H_
#define WASSDP_PRIVACY_H_

#include <string>
#include <vector>

#include "absl/status/status.h"

namespace wassdp {

// Neighboring datasets differ in one record and share the public size n;
// every mechanism here treats n as public.

// An (epsilon, delta) pair. Infinite epsilon is a no-privacy sentinel.
struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 0.0;

  absl::Status Validate() const;
};

// Checks epsilon > 0 (infinity allowed).
absl::Status ValidateEpsilon(double epsilon);

struct LedgerEntry {
  std::string mechanism;
  double epsilon = 0;
  double delta = 0;
  std::string detail;
};

// Basic composition across mechanism invocations. Totals are computed with
// an exactly rounded sum, so m equal charges of eps total to fl(m * eps).
// Not thread-safe; each estimation owns its ledger.
class PrivacyLedger {
 public:
  void Record(std::string mechanism, double epsilon, double delta,
              std::string detail = "");

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  double total_epsilon() const;
  double total_delta() const;

 private:
  std::vector<LedgerEntry> entries_;
};

// Exactly rounded sum of finite doubles (Shewchuk's partials); any infinite
// term makes the result infinite.
double ExactSum(const std::vector<double>& values);

}  // namespace wassdp

#endif  // WASSDP_PRIVACY_H_
