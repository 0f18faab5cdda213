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

#include "nsmax/objectives.hpp"

#include <cmath>
#include <string>

namespace nsmax {

// ---------------------------------------------------------------------------
// A-optimality

AOptObjective::AOptObjective(AOptConfig cfg) : cfg_(std::move(cfg)), prior_trace_(0.0) {
  const int d = cfg_.x.rows();
  const int n = cfg_.x.cols();
  if (d < 1 || n < 1 || n > kMaxGroundSize)
    throw ArgumentError("A-optimality needs a d x n stimulus matrix with 1 <= n <= 64");
  if (!(cfg_.beta > 0.0) || !(cfg_.sigma > 0.0))
    throw ArgumentError("A-optimality needs beta > 0 and sigma > 0");
  for (int j = 0; j < n; ++j) {
    double norm2 = 0.0;
    for (int i = 0; i < d; ++i) norm2 += cfg_.x(i, j) * cfg_.x(i, j);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
      throw ArgumentError("A-optimality stimulus column " + std::to_string(j) +
                          " is not unit-norm");
  }
  prior_trace_ = static_cast<double>(d) / (cfg_.beta * cfg_.beta);
}

double AOptObjective::eval(SubsetMask s) const {
  validate_mask(s, ground_size());
  if (s.is_empty()) return 0.0;
  const int d = cfg_.x.rows();
  const double inv_noise = 1.0 / (cfg_.sigma * cfg_.sigma);
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = cfg_.beta * cfg_.beta;
  s.for_each_element([&](int v) {
    for (int i = 0; i < d; ++i) {
      const double xi = cfg_.x(i, v);
      if (xi == 0.0) continue;
      for (int j = 0; j < d; ++j) m(i, j) += inv_noise * xi * cfg_.x(j, v);
    }
  });
  return prior_trace_ - trace_of_inverse(m);
}

double aopt_value(const AOptConfig& cfg, SubsetMask s) {
  return AOptObjective(cfg).eval(s);
}

bool aopt_monotone_check(const AOptConfig& cfg, int cap) {
  AOptObjective f(cfg);
  const int n = f.ground_size();
  if (n > cap) throw ScaleError("monotonicity check above the enumeration cap");
  DenseEvalTable table(f);
  for (uint64_t sbits = 0; sbits < (uint64_t{1} << n); ++sbits) {
    for (int w = 0; w < n; ++w) {
      if ((sbits >> w) & 1) continue;
      if (table.gain(w, SubsetMask(sbits)) < -kZeroTolerance) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Determinantal

DetObjective::DetObjective(DetConfig cfg) : cfg_(std::move(cfg)) {
  const int n = cfg_.sigma_mat.rows();
  if (!cfg_.sigma_mat.is_square() || n < 1 || n > kMaxGroundSize)
    throw ArgumentError("determinantal kernel must be square with 1 <= n <= 64");
  if (!(cfg_.sigma > 0.0)) throw ArgumentError("determinantal noise sigma must be > 0");
  const double scale = std::max(1.0, cfg_.sigma_mat.max_abs());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(cfg_.sigma_mat(i, j) - cfg_.sigma_mat(j, i)) > 1e-10 * scale)
        throw ArgumentError("determinantal kernel must be symmetric");
  const auto eig = sym_eigen(cfg_.sigma_mat);
  if (eig.eigenvalues.back() < -kZeroTolerance * scale)
    throw ArgumentError("determinantal kernel must be positive semidefinite");
}

double DetObjective::raw_value(SubsetMask s) const {
  validate_mask(s, ground_size());
  const double inv_noise = 1.0 / (cfg_.sigma * cfg_.sigma);
  Matrix a = cfg_.sigma_mat.principal_submatrix(s);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) a(i, j) *= inv_noise;
    a(i, i) += 1.0;
  }
  return lu_det(a);
}

double det_value(const DetConfig& cfg, SubsetMask s) {
  return DetObjective(cfg).eval(s);
}

Matrix se_kernel(const std::vector<std::vector<double>>& points, double h) {
  if (!(h > 0.0)) throw ArgumentError("SE kernel bandwidth must be > 0");
  const int n = static_cast<int>(points.size());
  Matrix k(n, n);
  for (int i = 0; i < n; ++i) {
    if (points[static_cast<size_t>(i)].size() != points[0].size())
      throw ArgumentError("SE kernel points must share one dimension");
    k(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double dist2 = 0.0;
      for (size_t c = 0; c < points[static_cast<size_t>(i)].size(); ++c) {
        const double diff = points[static_cast<size_t>(i)][c] - points[static_cast<size_t>(j)][c];
        dist2 += diff * diff;
      }
      k(i, j) = k(j, i) = std::exp(-dist2 / (h * h));
    }
  }
  return k;
}

// ---------------------------------------------------------------------------
// R^2

R2Objective::R2Objective(R2Config cfg) : cfg_(std::move(cfg)) {
  const int n = cfg_.c.rows();
  if (!cfg_.c.is_square() || n < 1 || n > kMaxGroundSize)
    throw ArgumentError("R^2 covariance must be square with 1 <= n <= 64");
  if (static_cast<int>(cfg_.b.size()) != n)
    throw ArgumentError("R^2 target covariance vector length mismatch");
  try {
    cholesky(cfg_.c);  // SPD check
  } catch (const ConditioningError&) {
    throw ArgumentError("R^2 covariance matrix must be positive definite");
  }
}

double R2Objective::eval(SubsetMask s) const {
  validate_mask(s, ground_size());
  if (s.is_empty()) return 0.0;
  const Matrix cs = cfg_.c.principal_submatrix(s);
  std::vector<double> bs;
  bs.reserve(static_cast<size_t>(s.cardinality()));
  s.for_each_element([&](int i) { bs.push_back(cfg_.b[static_cast<size_t>(i)]); });
  const auto y = lu_solve(cs, bs);
  double v = 0.0;
  for (size_t i = 0; i < bs.size(); ++i) v += bs[i] * y[i];
  return v;
}

double r2_value(const R2Config& cfg, SubsetMask s) {
  return R2Objective(cfg).eval(s);
}

// ---------------------------------------------------------------------------
// LP-auxiliary

LpAuxObjective::LpAuxObjective(lp::PolytopeSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.num_vars() > kMaxGroundSize)
    throw ArgumentError("LP-auxiliary objective supports at most 64 variables");
}

double lp_aux_value(const lp::PolytopeSpec& p, SubsetMask s) {
  return lp::solve_restricted(p, s).value;
}

// ---------------------------------------------------------------------------
// Tight worst-case family

TightObjective::TightObjective(TightConfig cfg) : cfg_(cfg) {
  if (cfg_.budget < 1) throw ArgumentError("tight family needs budget K >= 1");
  if (!(cfg_.gamma > 0.0) || cfg_.gamma > 1.0)
    throw ArgumentError("tight family needs gamma in (0, 1]");
  if (cfg_.alpha < 0.0 || cfg_.alpha > 1.0)
    throw ArgumentError("tight family needs alpha in [0, 1]");
  if (cfg_.n_dummies < 0 || 2 * cfg_.budget + cfg_.n_dummies > kMaxGroundSize)
    throw ArgumentError("tight family ground set exceeds 64 elements");
  xi_.resize(static_cast<size_t>(cfg_.budget));
  const int k = cfg_.budget;
  const double q = (k - cfg_.gamma * cfg_.alpha) / k;
  double cur = 1.0 / k;
  for (int i = 0; i < k; ++i) {
    xi_[static_cast<size_t>(i)] = cur;
    cur *= q;
  }
}

double TightObjective::xi(int i) const {
  if (i < 1 || i > cfg_.budget) throw ArgumentError("xi index must be in [1, K]");
  return xi_[static_cast<size_t>(i - 1)];
}

double TightObjective::f_curve(double x) const {
  const int k = cfg_.budget;
  if (x < 0.0 || x > static_cast<double>(k))
    throw ArgumentError("f is defined on [0, K]");
  if (k == 1) return x / cfg_.gamma;  // limit form of the quadratic
  const double inv_gamma = 1.0 / cfg_.gamma;
  const double a = (inv_gamma - 1.0) / (k - 1);
  const double b = (k - inv_gamma) / (k - 1);
  return a * x * x + b * x;
}

double TightObjective::eval(SubsetMask t) const {
  validate_mask(t, ground_size());
  const int k = cfg_.budget;
  int omega_count = 0;
  double j_sum = 0.0;
  for (int i = 0; i < k; ++i) {
    if (t.contains(i)) j_sum += xi_[static_cast<size_t>(i)];
    if (t.contains(k + i)) ++omega_count;
  }
  const double fval = f_curve(static_cast<double>(omega_count));
  return fval / k * (1.0 - cfg_.alpha * cfg_.gamma * j_sum) + j_sum;
}

double tight_value(const TightConfig& cfg, SubsetMask t) {
  return TightObjective(cfg).eval(t);
}

double tight_xi(const TightConfig& cfg, int i) { return TightObjective(cfg).xi(i); }

double tight_f(const TightConfig& cfg, double x) { return TightObjective(cfg).f_curve(x); }

// ---------------------------------------------------------------------------

std::unique_ptr<SetFunction> make_objective(const ObjectiveConfig& cfg) {
  return std::visit(
      [](const auto& c) -> std::unique_ptr<SetFunction> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AOptConfig>)
          return std::make_unique<AOptObjective>(c);
        else if constexpr (std::is_same_v<T, DetConfig>)
          return std::make_unique<DetObjective>(c);
        else if constexpr (std::is_same_v<T, R2Config>)
          return std::make_unique<R2Objective>(c);
        else if constexpr (std::is_same_v<T, lp::PolytopeSpec>)
          return std::make_unique<LpAuxObjective>(c);
        else
          return std::make_unique<TightObjective>(c);
      },
      cfg);
}

const char* objective_family_name(const ObjectiveConfig& cfg) {
  switch (cfg.index()) {
    case 0: return "aopt";
    case 1: return "det";
    case 2: return "r2";
    case 3: return "lp";
    default: return "tight";
  }
}

}  // namespace nsmax
