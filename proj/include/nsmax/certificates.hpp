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
// Exact desk-scale computation of the characterization parameters of a set
// function: submodularity ratio and curvature in both the full (all subsets)
// and greedy-chain versions, the classical total curvature, and structural
// classifiers. Constraints whose denominator is numerically zero impose
// nothing for a nondecreasing function; they are skipped and counted.
//

#pragma once

#include <cstdint>
#include <optional>

#include "nsmax/greedy.hpp"
#include "nsmax/subsets.hpp"

namespace nsmax {

struct CertificateLimits {
  int full_cap = kDefaultFullEnumerationCap;   // max n for full-parameter enumeration
  uint64_t greedy_enum_limit = 10'000'000;     // max C(n, K) for greedy parameters
  bool override_caps = false;
};

struct VacuousCounts {
  uint64_t gamma_full = 0;   // pairs (Omega, S) with rho_Omega(S) ~ 0
  uint64_t alpha_full = 0;   // triples (Omega, S, i) with rho_i(S\{i}) ~ 0
  uint64_t gamma_greedy = 0;
  uint64_t alpha_greedy = 0;
  uint64_t alpha_total_excluded = 0;  // elements with rho_i(empty) ~ 0
};

struct CertificateReport {
  std::optional<double> gamma_full;  // absent when n exceeds the cap
  std::optional<double> alpha_full;
  double gamma_greedy = 1.0;
  double alpha_greedy = 0.0;
  std::optional<double> alpha_total;  // absent when every element is excluded
  int budget = 0;
  VacuousCounts skipped;
};

// Largest gamma with sum_{w in Omega\S} rho_w(S) >= gamma * rho_Omega(S) over
// all pairs; 1 if every pair is vacuous. Result clamped to [0, 1].
double gamma_full(const DenseEvalTable& f, uint64_t* skipped = nullptr);

// Smallest alpha with rho_i(S\{i} u Omega) >= (1-alpha) rho_i(S\{i}) over all
// (Omega, S, i in S\Omega); 0 if every triple is vacuous. Clamped to [0, 1].
double alpha_full(const DenseEvalTable& f, uint64_t* skipped = nullptr);

// Greedy versions, quantified over |Omega| = K against the greedy chain.
double gamma_greedy(const SetFunction& f, const GreedyTrace& trace, int k,
                    const CertificateLimits& limits = {}, uint64_t* skipped = nullptr);
// Defined as 0 when K = 1 or K = n.
double alpha_greedy(const SetFunction& f, const GreedyTrace& trace, int k,
                    const CertificateLimits& limits = {}, uint64_t* skipped = nullptr);

// 1 - min_i rho_i(V\{i}) / rho_i(empty) over elements with positive singleton
// value; nullopt when every element is excluded.
std::optional<double> alpha_total(const SetFunction& f, uint64_t* excluded = nullptr);

// Exhaustive pairwise diminishing-returns tests.
bool is_submodular(const DenseEvalTable& f);
bool is_supermodular(const DenseEvalTable& f);

// Convenience overloads that tabulate f first; n above the cap raises a
// scale error.
double gamma_full(const SetFunction& f, const CertificateLimits& limits = {});
double alpha_full(const SetFunction& f, const CertificateLimits& limits = {});
bool is_submodular(const SetFunction& f, const CertificateLimits& limits = {});
bool is_supermodular(const SetFunction& f, const CertificateLimits& limits = {});

// The per-step inequality that drives the guarantee: with w = |S^t n Omega|,
//   alpha * sum_{i <= t, j_i not in Omega} rho_i
//     + sum_{i <= t, j_i in Omega} rho_i
//     + (K - w) / gamma * rho_{t+1}  >=  F(Omega) - 1e-7.
// Requires |Omega| = K, t in [0, K-1], gamma > 0.
bool check_lemma1(const SetFunction& f, const GreedyTrace& trace, SubsetMask omega,
                  int t, double alpha, double gamma);

// Everything at once; full parameters are filled only when n fits the cap.
CertificateReport compute_certificates(const SetFunction& f, const GreedyTrace& trace,
                                       int k, const CertificateLimits& limits = {});

}  // namespace nsmax
