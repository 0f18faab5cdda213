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
// Brute-force ground truth: the exact optimum over all subsets of size at
// most K, realized approximation ratios, and end-to-end verification that a
// greedy run meets its certificate-derived guarantee.
//

#pragma once

#include <cstdint>
#include <optional>

#include "nsmax/bounds.hpp"
#include "nsmax/greedy.hpp"
#include "nsmax/subsets.hpp"

namespace nsmax {

inline constexpr uint64_t kDefaultOptBudget = 10'000'000;

struct OptResult {
  SubsetMask best_set;
  double best_value = 0.0;
  uint64_t evaluations = 0;
};

// Exact maximizer over all |S| <= k; ties broken toward the lowest mask
// value. Throws a scale error when sum_{j<=k} C(n, j) exceeds the budget.
OptResult brute_force_opt(const SetFunction& f, int k,
                          uint64_t eval_budget = kDefaultOptBudget);

// F(S^K) / F(opt); nullopt marks the degenerate F(opt) ~ 0 case, where the
// guarantee holds trivially.
std::optional<double> approx_ratio(const SetFunction& f, const GreedyTrace& trace,
                                   int k, uint64_t eval_budget = kDefaultOptBudget);

// Runs greedy, measures certificates, evaluates both bound forms and the
// exact optimum, then checks realized >= bound_K - 1e-7 (in value and ratio
// form). A failed check is reported via pass = false, never masked.
BoundReport verify_guarantee(const SetFunction& f, int k, ParamSource source,
                             const CertificateLimits& limits = {},
                             uint64_t eval_budget = kDefaultOptBudget);

}  // namespace nsmax
