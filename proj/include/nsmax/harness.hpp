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
// Experiment harness: seeded instance generators, CSV ingestion, the sweep
// runner that pairs greedy runs with certificates / bounds / brute-force
// optima, and machine-readable emission (JSON and CSV carry identical
// numeric content).
//

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsmax/objectives.hpp"
#include "nsmax/oracle.hpp"
#include "nsmax/random.hpp"

namespace nsmax {

// --------------------------------------------------------------------------
// Generators (all deterministic given the seed)

// n samples of a d-dimensional Gaussian with equicorrelation `corr`, one per
// column, each column normalized to unit l2 norm.
Matrix gen_gaussian_design(int n, int d, double corr, uint64_t seed);

// Q diag(lambda) Q^T with lambda_i uniform in [eig_low, eig_high] and Q a
// random orthogonal matrix.
Matrix gen_random_psd(int n, double eig_low, double eig_high, uint64_t seed);

// A uniform in [0,1]^{m x n} (scaled by a_scale), b = d = ubar = 1.
lp::PolytopeSpec gen_random_lp(int n, int m, uint64_t seed, double a_scale = 1.0);

// Linear-model data for the R^2 objective: m_obs observations of n
// equicorrelated regressors, target = X * coeffs + noise, everything
// standardized so C has unit diagonal and F(S) <= 1.
R2Config gen_r2_instance(int n, int m_obs, double corr, double noise, uint64_t seed);

// Rectangular numeric CSV; a non-numeric first row is treated as a header.
Matrix load_csv_matrix(const std::string& path);

// Rows become stimuli: transpose to d x n and normalize columns.
AOptConfig aopt_from_csv(const std::string& path, double beta, double sigma);

// --------------------------------------------------------------------------
// Experiment configuration (flat key = value text file)

enum class OutputFormat { kJson, kCsv };

struct ExperimentConfig {
  std::string objective = "aopt";  // aopt | det | r2 | lp | tight
  int n = 12;
  int d = 6;           // aopt feature count
  int m = 20;          // lp constraint rows
  int m_obs = 100;     // r2 observations
  double corr = 0.5;   // aopt / r2 correlation
  double beta = 1.0;   // aopt prior scale
  double sigma = 5e-4; // aopt noise; det uses det_sigma
  double det_sigma = 2.0;
  double eig_low = 0.0;
  double eig_high = 1.0;
  double noise = 1.0;      // r2 target noise
  double a_scale = 1.0;    // lp constraint matrix scale
  double tight_gamma = 0.5;
  double tight_alpha = 0.8;
  int tight_dummies = 0;
  std::string matrix_file;  // aopt stimuli from CSV instead of synthetic

  int k_min = 1;
  int k_max = 6;
  uint64_t seed = 1;
  int repeats = 20;
  ParamSource param_source = ParamSource::kGreedy;
  bool compute_opt = true;
  bool timings = true;  // set off for byte-identical reruns
  std::string output;   // path; empty = stdout
  OutputFormat format = OutputFormat::kJson;

  CertificateLimits limits;
  uint64_t opt_budget = kDefaultOptBudget;

  void validate() const;
};

ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config(std::istream& in, const std::string& origin);

// --------------------------------------------------------------------------
// Results

struct ResultRow {
  int k = 0;
  double ratio_mean = 0.0, ratio_std = 0.0;
  double gamma_greedy_mean = 0.0, gamma_greedy_std = 0.0;
  double alpha_greedy_mean = 0.0, alpha_greedy_std = 0.0;
  double alpha_total_mean = 0.0, alpha_total_std = 0.0;
  double bound_const_mean = 0.0;
  double bound_k_mean = 0.0;
  double greedy_value_mean = 0.0;
  double opt_value_mean = 0.0;
  double runtime_greedy_sec = 0.0;  // mean wall time of the greedy run
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  bool all_guarantees_pass = true;
  std::vector<std::string> falsified;  // human-readable (K, repeat) diagnostics
};

// Builds one instance per repeat (same instance across the K sweep), runs
// greedy, measures certificates and bounds, optionally the exact optimum,
// and aggregates mean/std per K. Throws GuaranteeFalsified only from
// run_and_emit; run_experiment reports falsification in the result.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_json(const ExperimentConfig& cfg, const ExperimentResult& result,
                std::ostream& out);
void write_csv(const ExperimentConfig& cfg, const ExperimentResult& result,
               std::ostream& out);

// Full CLI path: run, emit to cfg.output (or stdout), throw
// GuaranteeFalsified if any guarantee failed.
void run_and_emit(const ExperimentConfig& cfg, std::ostream& fallback);

}  // namespace nsmax
