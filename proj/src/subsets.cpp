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

#include "nsmax/subsets.hpp"

namespace nsmax {

std::string SubsetMask::to_string(int n) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

void validate_mask(SubsetMask s, int n) {
  if (n < 1 || n > kMaxGroundSize) throw ArgumentError("invalid ground set size");
  if (!s.subset_of(SubsetMask::full_set(n)))
    throw ArgumentError("mask uses elements outside the ground set of size " +
                        std::to_string(n));
}

double marginal_gain(const SetFunction& f, SubsetMask omega, SubsetMask s) {
  const int n = f.ground_size();
  validate_mask(omega, n);
  validate_mask(s, n);
  if (omega.subset_of(s)) return 0.0;
  return f.eval(omega | s) - f.eval(s);
}

double MemoizedEvaluator::eval(SubsetMask s) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(s.bits());
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  // Evaluate outside the lock; concurrent duplicate work is harmless since
  // the inner function is deterministic.
  const double v = inner_.eval(s);
  std::lock_guard<std::mutex> lock(mu_);
  ++misses_;
  cache_.emplace(s.bits(), v);
  return v;
}

uint64_t MemoizedEvaluator::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

uint64_t MemoizedEvaluator::misses() const {
  std::lock_guard<std::mutex> lock(mu_);
  return misses_;
}

DenseEvalTable::DenseEvalTable(const SetFunction& f) : n_(f.ground_size()) {
  if (n_ < 1 || n_ > kMaxDenseTableBits)
    throw ScaleError("dense tabulation of 2^" + std::to_string(n_) +
                     " values exceeds the table limit of 2^" +
                     std::to_string(kMaxDenseTableBits));
  values_.resize(uint64_t{1} << n_);
  for (uint64_t m = 0; m < values_.size(); ++m)
    values_[m] = f.eval(SubsetMask(m));
}

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<uint64_t>(r);
}

std::vector<SubsetMask> enumerate_k_subsets(int n, int k) {
  if (k < 0 || n < 0 || n > kMaxGroundSize || k > n)
    throw ArgumentError("enumerate_k_subsets requires 0 <= k <= n <= 64");
  std::vector<SubsetMask> out;
  out.reserve(static_cast<size_t>(binomial(n, k)));
  for_each_k_subset(n, k, [&](SubsetMask m) { out.push_back(m); });
  return out;
}

}  // namespace nsmax
