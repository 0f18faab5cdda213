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
// The standard greedy loop for cardinality-constrained maximization, with a
// full per-step trace and deterministic tie-breaking.
//

#pragma once

#include <vector>

#include "nsmax/subsets.hpp"

namespace nsmax {

// Gains within this distance of the step maximum count as tied.
inline constexpr double kTieTolerance = 1e-9;

enum class TieBreak {
  kLowestIndex,   // default
  kHighestIndex,
};

// The chain S^0 c S^1 c ... c S^K with the chosen element and marginal gain
// of every step. chain has K+1 entries, chosen and gains have K.
struct GreedyTrace {
  std::vector<SubsetMask> chain;
  std::vector<int> chosen;
  std::vector<double> gains;

  int budget() const { return static_cast<int>(chosen.size()); }
  SubsetMask selected() const { return chain.back(); }
  // Telescoping objective value F(S^K) (exact for normalized F).
  double value() const {
    double v = 0.0;
    for (double g : gains) v += g;
    return v;
  }
};

// Runs exactly k steps (no early stop on zero or negative gains). At each
// step picks the element maximizing the marginal gain over the remaining
// ground set; ties within kTieTolerance are resolved by the tie-break policy.
GreedyTrace run_greedy(const SetFunction& f, int k,
                       TieBreak tie_break = TieBreak::kLowestIndex);

}  // namespace nsmax
