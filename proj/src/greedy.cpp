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

#include "nsmax/greedy.hpp"

#include <string>

namespace nsmax {

GreedyTrace run_greedy(const SetFunction& f, int k, TieBreak tie_break) {
  const int n = f.ground_size();
  if (k < 1 || k > n)
    throw ArgumentError("greedy budget must be in [1, n]; got k = " + std::to_string(k) +
                        " with n = " + std::to_string(n));

  GreedyTrace trace;
  trace.chain.reserve(static_cast<size_t>(k) + 1);
  trace.chosen.reserve(static_cast<size_t>(k));
  trace.gains.reserve(static_cast<size_t>(k));

  SubsetMask s = SubsetMask::empty_set();
  trace.chain.push_back(s);
  double fs = f.eval(s);

  for (int step = 0; step < k; ++step) {
    double best_gain = 0.0;
    bool have_best = false;
    std::vector<double> gain(static_cast<size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      const double g = f.eval(s.with(v)) - fs;
      gain[static_cast<size_t>(v)] = g;
      if (!have_best || g > best_gain) {
        best_gain = g;
        have_best = true;
      }
    }

    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      if (gain[static_cast<size_t>(v)] >= best_gain - kTieTolerance) {
        pick = v;
        if (tie_break == TieBreak::kLowestIndex) break;
      }
    }

    s = s.with(pick);
    trace.chain.push_back(s);
    trace.chosen.push_back(pick);
    trace.gains.push_back(gain[static_cast<size_t>(pick)]);
    // Re-evaluate rather than accumulate so gains stay exact differences.
    fs = f.eval(s);
  }
  return trace;
}

}  // namespace nsmax
