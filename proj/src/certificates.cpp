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

#include "nsmax/certificates.hpp"

#include <algorithm>
#include <string>

namespace nsmax {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void require_cap(int n, const CertificateLimits& limits, const char* what) {
  if (n > limits.full_cap && !limits.override_caps)
    throw ScaleError(std::string(what) + " over n = " + std::to_string(n) +
                     " exceeds the full-enumeration cap of " +
                     std::to_string(limits.full_cap));
}

void require_trace(const GreedyTrace& trace, int k, int n) {
  if (trace.budget() != k || k < 1 || k > n)
    throw ArgumentError("trace budget does not match K");
}

uint64_t check_greedy_scale(int n, int k, const CertificateLimits& limits) {
  const uint64_t count = binomial(n, k);
  if (count > limits.greedy_enum_limit && !limits.override_caps)
    throw ScaleError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") exceeds the greedy enumeration limit");
  return count;
}

}  // namespace

// The pair (Omega, S) enters Def.-style quantifiers only through
// M = Omega \ S: both sides of the inequality are functions of (S, M). Each
// class (S, M) therefore stands for 2^|S| literal pairs, which is how the
// skipped counter stays faithful to the 4^n enumeration.
double gamma_full(const DenseEvalTable& f, uint64_t* skipped) {
  const int n = f.ground_size();
  double worst = 2.0;
  uint64_t vacuous = 0;
  const uint64_t top = uint64_t{1} << n;
  std::vector<double> rho(static_cast<size_t>(n));

  for (uint64_t sbits = 0; sbits < top; ++sbits) {
    const SubsetMask s(sbits);
    const uint64_t comp = (top - 1) & ~sbits;
    const uint64_t pair_mult = uint64_t{1} << std::popcount(sbits);
    for (int w = 0; w < n; ++w)
      if ((comp >> w) & 1) rho[static_cast<size_t>(w)] = f.gain(w, s);

    uint64_t m = comp;
    while (true) {  // all submasks of comp, including empty
      const double den = f.value(sbits | m) - f.value(sbits);
      if (den <= kZeroTolerance) {
        vacuous += pair_mult;
      } else {
        double num = 0.0;
        uint64_t mm = m;
        while (mm) {
          num += rho[static_cast<size_t>(std::countr_zero(mm))];
          mm &= mm - 1;
        }
        worst = std::min(worst, num / den);
      }
      if (m == 0) break;
      m = (m - 1) & comp;
    }
  }
  if (skipped) *skipped = vacuous;
  if (worst > 1.5) return 1.0;  // every pair vacuous
  return clamp01(worst);
}

// Triples (Omega, S, i) depend on Omega only through U = (S\{i}) u Omega, so
// the scan runs over (i, S' = S\{i}, U >= S'); each class stands for 2^|S'|
// literal triples.
double alpha_full(const DenseEvalTable& f, uint64_t* skipped) {
  const int n = f.ground_size();
  double worst = -1.0;
  uint64_t vacuous = 0;
  const uint64_t top = uint64_t{1} << n;

  for (int i = 0; i < n; ++i) {
    const uint64_t bit = uint64_t{1} << i;
    const uint64_t others = (top - 1) & ~bit;
    // S' iterates over subsets of V \ {i} via the submask walk.
    uint64_t sp = others;
    while (true) {
      const double den = f.value(sp | bit) - f.value(sp);
      if (den <= kZeroTolerance) {
        vacuous += uint64_t{1} << (n - 1);  // every Omega is vacuous for this (S, i)
      } else {
        const uint64_t rest = others & ~sp;
        uint64_t t = rest;
        while (true) {  // U = sp | t over supersets of S' within V \ {i}
          const uint64_t u = sp | t;
          const double num = f.value(u | bit) - f.value(u);
          worst = std::max(worst, 1.0 - num / den);
          if (t == 0) break;
          t = (t - 1) & rest;
        }
      }
      if (sp == 0) break;
      sp = (sp - 1) & others;
    }
  }
  if (skipped) *skipped = vacuous;
  if (worst < -0.5) return 0.0;  // every triple vacuous
  return clamp01(worst);
}

double gamma_greedy(const SetFunction& f, const GreedyTrace& trace, int k,
                    const CertificateLimits& limits, uint64_t* skipped) {
  const int n = f.ground_size();
  require_trace(trace, k, n);
  check_greedy_scale(n, k, limits);

  double worst = 2.0;
  uint64_t vacuous = 0;
  std::vector<double> rho(static_cast<size_t>(n));

  for (int t = 0; t < k; ++t) {
    const SubsetMask st = trace.chain[static_cast<size_t>(t)];
    const double fst = f.eval(st);
    for (int w = 0; w < n; ++w)
      if (!st.contains(w)) rho[static_cast<size_t>(w)] = f.eval(st.with(w)) - fst;

    for_each_k_subset(n, k, [&](SubsetMask omega) {
      const double den = f.eval(omega | st) - fst;
      if (den <= kZeroTolerance) {
        ++vacuous;
        return;
      }
      double num = 0.0;
      (omega - st).for_each_element([&](int w) { num += rho[static_cast<size_t>(w)]; });
      worst = std::min(worst, num / den);
    });
  }
  if (skipped) *skipped = vacuous;
  if (worst > 1.5) return 1.0;
  return clamp01(worst);
}

double alpha_greedy(const SetFunction& f, const GreedyTrace& trace, int k,
                    const CertificateLimits& limits, uint64_t* skipped) {
  const int n = f.ground_size();
  require_trace(trace, k, n);
  if (skipped) *skipped = 0;
  if (k == 1 || k == n) return 0.0;  // S^{K-1} \ Omega is empty
  check_greedy_scale(n, k, limits);

  double worst = -1.0;
  uint64_t vacuous = 0;

  for_each_k_subset(n, k, [&](SubsetMask omega) {
    for (int step = 0; step + 1 < k; ++step) {  // j_i with i in [1, K-1]
      const int ji = trace.chosen[static_cast<size_t>(step)];
      if (omega.contains(ji)) continue;
      const double den = trace.gains[static_cast<size_t>(step)];
      if (den <= kZeroTolerance) {
        ++vacuous;
        continue;
      }
      const SubsetMask context = trace.chain[static_cast<size_t>(step)] | omega;
      const double num = f.eval(context.with(ji)) - f.eval(context);
      worst = std::max(worst, 1.0 - num / den);
    }
  });
  if (skipped) *skipped = vacuous;
  if (worst < -0.5) return 0.0;
  return clamp01(worst);
}

std::optional<double> alpha_total(const SetFunction& f, uint64_t* excluded) {
  const int n = f.ground_size();
  const SubsetMask full = SubsetMask::full_set(n);
  const double f_full = f.eval(full);
  const double f_empty = f.eval(SubsetMask::empty_set());

  double best_ratio = 2.0;
  uint64_t skipped = 0;
  for (int i = 0; i < n; ++i) {
    const double den = f.eval(SubsetMask::singleton(i)) - f_empty;
    if (den <= kZeroTolerance) {
      ++skipped;
      continue;
    }
    const double num = f_full - f.eval(full.without(i));
    best_ratio = std::min(best_ratio, num / den);
  }
  if (excluded) *excluded = skipped;
  if (best_ratio > 1.5) return std::nullopt;  // undefined: no positive singleton
  return clamp01(1.0 - best_ratio);
}

bool is_submodular(const DenseEvalTable& f) {
  const int n = f.ground_size();
  const uint64_t top = uint64_t{1} << n;
  for (uint64_t sbits = 0; sbits < top; ++sbits) {
    const double fs = f.value(sbits);
    for (int i = 0; i < n; ++i) {
      if ((sbits >> i) & 1) continue;
      const uint64_t si = sbits | (uint64_t{1} << i);
      for (int j = i + 1; j < n; ++j) {
        if ((sbits >> j) & 1) continue;
        const uint64_t sj = sbits | (uint64_t{1} << j);
        if (f.value(si) + f.value(sj) < f.value(si | sj) + fs - kZeroTolerance)
          return false;
      }
    }
  }
  return true;
}

bool is_supermodular(const DenseEvalTable& f) {
  const int n = f.ground_size();
  const uint64_t top = uint64_t{1} << n;
  for (uint64_t sbits = 0; sbits < top; ++sbits) {
    const double fs = f.value(sbits);
    for (int i = 0; i < n; ++i) {
      if ((sbits >> i) & 1) continue;
      const uint64_t si = sbits | (uint64_t{1} << i);
      for (int j = i + 1; j < n; ++j) {
        if ((sbits >> j) & 1) continue;
        const uint64_t sj = sbits | (uint64_t{1} << j);
        if (f.value(si | sj) + fs < f.value(si) + f.value(sj) - kZeroTolerance)
          return false;
      }
    }
  }
  return true;
}

double gamma_full(const SetFunction& f, const CertificateLimits& limits) {
  require_cap(f.ground_size(), limits, "gamma");
  return gamma_full(DenseEvalTable(f));
}

double alpha_full(const SetFunction& f, const CertificateLimits& limits) {
  require_cap(f.ground_size(), limits, "alpha");
  return alpha_full(DenseEvalTable(f));
}

bool is_submodular(const SetFunction& f, const CertificateLimits& limits) {
  require_cap(f.ground_size(), limits, "submodularity test");
  return is_submodular(DenseEvalTable(f));
}

bool is_supermodular(const SetFunction& f, const CertificateLimits& limits) {
  require_cap(f.ground_size(), limits, "supermodularity test");
  return is_supermodular(DenseEvalTable(f));
}

bool check_lemma1(const SetFunction& f, const GreedyTrace& trace, SubsetMask omega,
                  int t, double alpha, double gamma) {
  const int k = trace.budget();
  const int n = f.ground_size();
  validate_mask(omega, n);
  if (omega.cardinality() != k) throw ArgumentError("check_lemma1 needs |Omega| = K");
  if (t < 0 || t >= k) throw ArgumentError("check_lemma1 needs t in [0, K-1]");
  if (!(gamma > 0.0)) throw ArgumentError("check_lemma1 needs gamma > 0");

  int inside = 0;
  double lhs = 0.0;
  for (int step = 0; step < t; ++step) {
    const int ji = trace.chosen[static_cast<size_t>(step)];
    if (omega.contains(ji)) {
      lhs += trace.gains[static_cast<size_t>(step)];
      ++inside;
    } else {
      lhs += alpha * trace.gains[static_cast<size_t>(step)];
    }
  }
  lhs += (k - inside) / gamma * trace.gains[static_cast<size_t>(t)];
  const double f_omega = f.eval(omega);
  return lhs >= f_omega - 1e-7;
}

CertificateReport compute_certificates(const SetFunction& f, const GreedyTrace& trace,
                                       int k, const CertificateLimits& limits) {
  const int n = f.ground_size();
  require_trace(trace, k, n);

  CertificateReport report;
  report.budget = k;

  if (n <= limits.full_cap || limits.override_caps) {
    const DenseEvalTable table(f);
    report.gamma_full = gamma_full(table, &report.skipped.gamma_full);
    report.alpha_full = alpha_full(table, &report.skipped.alpha_full);
    report.gamma_greedy = gamma_greedy(table, trace, k, limits, &report.skipped.gamma_greedy);
    report.alpha_greedy = alpha_greedy(table, trace, k, limits, &report.skipped.alpha_greedy);
    report.alpha_total = alpha_total(table, &report.skipped.alpha_total_excluded);
  } else {
    const MemoizedEvaluator memo(f);
    report.gamma_greedy = gamma_greedy(memo, trace, k, limits, &report.skipped.gamma_greedy);
    report.alpha_greedy = alpha_greedy(memo, trace, k, limits, &report.skipped.alpha_greedy);
    report.alpha_total = alpha_total(memo, &report.skipped.alpha_total_excluded);
  }
  return report;
}

}  // namespace nsmax
