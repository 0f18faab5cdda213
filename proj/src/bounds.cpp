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

#include "nsmax/bounds.hpp"

#include <cmath>
#include <string>

namespace nsmax {

namespace {

void require_params(double alpha, double gamma) {
  if (!(alpha >= 0.0) || alpha > 1.0)
    throw ArgumentError("curvature alpha must be in [0, 1]");
  if (!(gamma >= 0.0) || gamma > 1.0)
    throw ArgumentError("submodularity ratio gamma must be in [0, 1]");
}

}  // namespace

double bound_const(double alpha, double gamma) {
  require_params(alpha, gamma);
  if (alpha < kAlphaLimitTolerance) return gamma;
  return (1.0 - std::exp(-alpha * gamma)) / alpha;
}

double bound_K(double alpha, double gamma, int k) {
  require_params(alpha, gamma);
  if (k < 1) throw ArgumentError("budget K must be >= 1");
  if (alpha < kAlphaLimitTolerance) return gamma;
  const double base = (k - alpha * gamma) / k;
  return (1.0 - std::pow(base, k)) / alpha;
}

double bound_extended(double alpha, double gamma, int k, int kprime) {
  require_params(alpha, gamma);
  if (k < 1 || kprime < k) throw ArgumentError("extension needs K' >= K >= 1");
  const double stretch = static_cast<double>(kprime) / k;
  if (alpha < kAlphaLimitTolerance) return gamma * stretch;
  return (1.0 - std::exp(-alpha * gamma * stretch)) / alpha;
}

ParamBounds aopt_param_bounds(const AOptConfig& cfg) {
  AOptObjective check(cfg);  // validates unit columns and positive beta/sigma
  const double norm = spectral_norm(cfg.x);
  const double norm2 = norm * norm;
  const double beta2 = cfg.beta * cfg.beta;
  const double inv_noise = 1.0 / (cfg.sigma * cfg.sigma);
  ParamBounds out;
  out.gamma_lower = beta2 / (norm2 * (beta2 + inv_noise * norm2));
  out.alpha_upper = 1.0 - out.gamma_lower;
  return out;
}

std::optional<double> det_gamma_bound(const DetConfig& cfg, int k) {
  DetObjective check(cfg);  // validates symmetry / PSD
  const int n = cfg.sigma_mat.rows();
  if (k < 1 || k > n) throw ArgumentError("det bound needs 1 <= K <= n");

  Matrix a = cfg.sigma_mat;
  const double inv_noise = 1.0 / (cfg.sigma * cfg.sigma);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) *= inv_noise;
    a(i, i) += 1.0;
  }
  const auto eig = sym_eigen(a);
  const double lambda_min = eig.eigenvalues.back();
  if (lambda_min <= 1.0 + 1e-12) return std::nullopt;  // vacuous

  double prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= eig.eigenvalues[static_cast<size_t>(j)];
  return k * (lambda_min - 1.0) / (prod - 1.0);
}

double r2_gamma_bound(const R2Config& cfg) {
  R2Objective check(cfg);  // validates SPD
  return sym_eigen(cfg.c).eigenvalues.back();
}

double lp_gamma0(const lp::PolytopeSpec& p, const CertificateLimits& limits) {
  const int n = p.num_vars();
  if (n > limits.full_cap && !limits.override_caps)
    throw ScaleError("gamma_0 enumeration over n = " + std::to_string(n) +
                     " exceeds the cap");
  const LpAuxObjective f(p);
  const DenseEvalTable table(f);

  double min_gain = -1.0;
  const uint64_t top = uint64_t{1} << n;
  for (uint64_t sbits = 0; sbits < top; ++sbits) {
    for (int w = 0; w < n; ++w) {
      if ((sbits >> w) & 1) continue;
      const double g = table.gain(w, SubsetMask(sbits));
      if (g > kZeroTolerance && (min_gain < 0.0 || g < min_gain)) min_gain = g;
    }
  }
  if (min_gain < 0.0) return 1.0;  // no positive gains anywhere (e.g. d = 0)

  const double f_full = table.value(top - 1);
  if (f_full <= kZeroTolerance)
    throw DegeneracyError("gamma_0 undefined: F(V) = 0 despite positive gains");
  return min_gain / f_full;
}

}  // namespace nsmax
