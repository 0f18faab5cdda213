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
// The objective zoo: Bayesian A-optimality, normalized determinantal value,
// squared multiple correlation (R^2), the LP-auxiliary set function, and the
// tight worst-case family. Every objective is normalized (F(empty) = 0),
// nondecreasing, and pure given its config.
//

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "nsmax/linalg.hpp"
#include "nsmax/lp.hpp"
#include "nsmax/subsets.hpp"

namespace nsmax {

// ---------------------------------------------------------------------------
// Bayesian A-optimality: variance reduction of an isotropic Gaussian prior
// after observing the stimuli in S through a linear-Gaussian model.

struct AOptConfig {
  Matrix x;      // d x n stimuli, unit-norm columns
  double beta;   // prior precision scale, Lambda = beta^2 I
  double sigma;  // observation noise standard deviation
};

class AOptObjective final : public SetFunction {
 public:
  explicit AOptObjective(AOptConfig cfg);
  int ground_size() const override { return cfg_.x.cols(); }
  double eval(SubsetMask s) const override;
  const AOptConfig& config() const { return cfg_; }

 private:
  AOptConfig cfg_;
  double prior_trace_;
};

double aopt_value(const AOptConfig& cfg, SubsetMask s);

// Exhaustively verifies that all marginal gains are >= -1e-9.
bool aopt_monotone_check(const AOptConfig& cfg, int cap = kDefaultFullEnumerationCap);

// ---------------------------------------------------------------------------
// Determinantal value of the noise-scaled kernel submatrix, shifted by -1 so
// that F(empty) = 0. The shift leaves every marginal gain unchanged.

struct DetConfig {
  Matrix sigma_mat;  // n x n symmetric PSD kernel/covariance
  double sigma;      // noise scale
};

class DetObjective final : public SetFunction {
 public:
  explicit DetObjective(DetConfig cfg);
  int ground_size() const override { return cfg_.sigma_mat.rows(); }
  double eval(SubsetMask s) const override { return raw_value(s) - 1.0; }
  double raw_value(SubsetMask s) const;  // det(I + sigma^-2 Sigma_S)
  const DetConfig& config() const { return cfg_; }

 private:
  DetConfig cfg_;
};

double det_value(const DetConfig& cfg, SubsetMask s);

// K_ij = exp(-|x_i - x_j|^2 / h^2); symmetric PSD with unit diagonal.
Matrix se_kernel(const std::vector<std::vector<double>>& points, double h);

// ---------------------------------------------------------------------------
// Squared multiple correlation: fraction of target variance explained by a
// linear predictor on the variables in S.

struct R2Config {
  Matrix c;               // n x n SPD covariances among observation variables
  std::vector<double> b;  // covariances with the (unit-variance) target
};

class R2Objective final : public SetFunction {
 public:
  explicit R2Objective(R2Config cfg);
  int ground_size() const override { return cfg_.c.rows(); }
  double eval(SubsetMask s) const override;
  const R2Config& config() const { return cfg_; }

 private:
  R2Config cfg_;
};

double r2_value(const R2Config& cfg, SubsetMask s);

// ---------------------------------------------------------------------------
// LP-auxiliary set function: optimal LP value when variables outside S are
// forced to zero.

class LpAuxObjective final : public SetFunction {
 public:
  explicit LpAuxObjective(lp::PolytopeSpec spec);
  int ground_size() const override { return spec_.num_vars(); }
  double eval(SubsetMask s) const override { return lp::solve_restricted(spec_, s).value; }
  const lp::PolytopeSpec& spec() const { return spec_; }

 private:
  lp::PolytopeSpec spec_;
};

double lp_aux_value(const lp::PolytopeSpec& p, SubsetMask s);

// ---------------------------------------------------------------------------
// Tight worst-case family. Ground set: budget elements j_1..j_K (indices
// 0..K-1), then omega_1..omega_K (indices K..2K-1), then inert dummies.
// Greedy with lowest-index tie-breaking picks the j block; the optimum is
// the omega block with value 1/gamma.

struct TightConfig {
  int budget;        // K
  double gamma;      // target submodularity ratio, (0, 1]
  double alpha;      // target curvature, [0, 1]
  int n_dummies = 0;
};

class TightObjective final : public SetFunction {
 public:
  explicit TightObjective(TightConfig cfg);
  int ground_size() const override { return 2 * cfg_.budget + cfg_.n_dummies; }
  double eval(SubsetMask s) const override;
  double xi(int i) const;          // per-step gain constants, i in [1, K]
  double f_curve(double x) const;  // convex nondecreasing, f(0)=0, f(1)=1, f(K)=K/gamma
  const TightConfig& config() const { return cfg_; }

 private:
  TightConfig cfg_;
  std::vector<double> xi_;
};

double tight_value(const TightConfig& cfg, SubsetMask t);
double tight_xi(const TightConfig& cfg, int i);
double tight_f(const TightConfig& cfg, double x);

// ---------------------------------------------------------------------------
// Tagged union over the five families plus a factory, for harness plumbing.

using ObjectiveConfig =
    std::variant<AOptConfig, DetConfig, R2Config, lp::PolytopeSpec, TightConfig>;

std::unique_ptr<SetFunction> make_objective(const ObjectiveConfig& cfg);
const char* objective_family_name(const ObjectiveConfig& cfg);

}  // namespace nsmax
