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
// The approximation-guarantee formulas in terms of curvature alpha and
// submodularity ratio gamma, the budget-extension variant, and closed-form
// parameter bounds for each objective family.
//

#pragma once

#include <optional>

#include "nsmax/certificates.hpp"
#include "nsmax/objectives.hpp"

namespace nsmax {

// Below this, alpha is treated as exactly 0 and the analytic limit is used.
inline constexpr double kAlphaLimitTolerance = 1e-12;

// (1/alpha) * (1 - e^{-alpha*gamma}); the alpha -> 0 limit is gamma.
double bound_const(double alpha, double gamma);

// (1/alpha) * [1 - ((K - alpha*gamma)/K)^K]. The alpha -> 0 limit is again
// gamma: expanding (1 - alpha*gamma/K)^K = 1 - alpha*gamma + O(alpha^2)
// makes the bracket alpha*gamma + O(alpha^2), so the quotient tends to gamma.
double bound_K(double alpha, double gamma, int k);

// Guarantee when greedy may pick kprime >= k elements:
// (1/alpha) * (1 - e^{-alpha*gamma*kprime/k}); alpha -> 0 limit is
// gamma*kprime/k. Deliberately not clamped to 1; values above 1 simply mean
// the run is provably optimal.
double bound_extended(double alpha, double gamma, int k, int kprime);

struct ParamBounds {
  double gamma_lower = 0.0;
  double alpha_upper = 1.0;
};

// gamma >= beta^2 / (|X|^2 (beta^2 + sigma^-2 |X|^2)), alpha <= 1 - that,
// with |X| the spectral norm of the stimulus matrix.
ParamBounds aopt_param_bounds(const AOptConfig& cfg);

// gamma_greedy >= K (lambda_n - 1) / (prod_{j<=K} lambda_j - 1) with lambda
// the descending eigenvalues of I + sigma^-2 Sigma. Returns nullopt when
// lambda_n <= 1 (bound vacuous), which distinguishes "no information" from
// "bound = 0".
std::optional<double> det_gamma_bound(const DetConfig& cfg, int k);

// gamma >= smallest eigenvalue of the covariance matrix.
double r2_gamma_bound(const R2Config& cfg);

// gamma_0 = min over S, w not in S with rho_w(S) > 0 of rho_w(S) / F(V);
// 1 when no positive gains exist. Exhaustive, so capped at desk scale; only
// meaningful when the restricted LPs are non-degenerate.
double lp_gamma0(const lp::PolytopeSpec& p, const CertificateLimits& limits = {});

enum class ParamSource { kFull, kGreedy };

// Theoretical guarantees next to the realized ratio for one run.
struct BoundReport {
  double alpha_used = 0.0;
  double gamma_used = 0.0;
  ParamSource source = ParamSource::kGreedy;
  double bound_const_value = 0.0;
  double bound_k_value = 0.0;
  double greedy_value = 0.0;
  double opt_value = 0.0;
  std::optional<double> realized_ratio;  // absent when F(opt) ~ 0
  std::optional<ParamBounds> theory_param_bounds;
  bool pass = false;  // realized >= bound_K within 1e-7 (trivially true when
                      // the optimum is ~ 0)
};

}  // namespace nsmax
