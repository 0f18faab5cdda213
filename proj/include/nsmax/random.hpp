// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//
// Deterministic randomness for the experiment harness. The generator is
// std::mt19937_64 (fully specified by the standard, so streams are
// reproducible across platforms). Uniform doubles take the top 53 bits;
// normals use an explicit Box-Muller transform because the standard library
// distribution algorithms are implementation-defined.
//
// Stream split: repeat r of an experiment draws from a generator seeded with
// child_seed(master, r), so adding repeats or reordering work never perturbs
// the values of existing repeats.
//

#pragma once

#include <cstdint>
#include <random>

namespace nsmax {

// SplitMix64 step; used only to derive child seeds.
uint64_t splitmix64(uint64_t x);

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  static uint64_t child_seed(uint64_t master, uint64_t index) {
    return splitmix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
  }

  uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; two uniforms per draw, no state.
  double normal01();

 private:
  std::mt19937_64 gen_;
};

}  // namespace nsmax
