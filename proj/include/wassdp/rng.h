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

#ifndef WASSDP_RNG_H_
#define WASSDP_RNG_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace wassdp {

inline constexpr uint64_t kDefaultSeed = 20260101;

// Seeded random stream. The conversions to doubles and integers are done
// here rather than through std distributions so that outputs are identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t seed() const { return seed_; }

  // Independent child stream. Depends only on the seed and `stream`, not on
  // how much of this stream has been consumed.
  Rng Split(uint64_t stream) const;

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform();
  // Uniform on (0, 1].
  double UniformPositive();
  // Uniform integer in [0, n). Requires n > 0.
  uint64_t UniformInt(uint64_t n);

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[UniformInt(i)]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

uint64_t SplitMix64(uint64_t x);

}  // namespace wassdp

#endif  // WASSDP_RNG_H_
