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
// Ground-set and subset machinery shared by every other module: a one-word
// subset mask over a universe of at most 64 elements, the set-function
// evaluation contract, marginal gains, memoized and fully tabulated
// evaluators, and subset enumeration.
//

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsmax/errors.hpp"

namespace nsmax {

inline constexpr int kMaxGroundSize = 64;
// Values this close to zero are treated as zero in ratio denominators.
inline constexpr double kZeroTolerance = 1e-9;

// A subset of {0, ..., n-1} packed into one 64-bit word.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask empty_set() { return SubsetMask(0); }
  static constexpr SubsetMask singleton(int i) { return SubsetMask(uint64_t{1} << i); }
  static constexpr SubsetMask full_set(int n) {
    return SubsetMask(n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static SubsetMask of(std::initializer_list<int> elements) {
    uint64_t b = 0;
    for (int i : elements) b |= uint64_t{1} << i;
    return SubsetMask(b);
  }

  constexpr uint64_t bits() const { return bits_; }
  int cardinality() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr SubsetMask with(int i) const { return SubsetMask(bits_ | (uint64_t{1} << i)); }
  constexpr SubsetMask without(int i) const { return SubsetMask(bits_ & ~(uint64_t{1} << i)); }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(SubsetMask a, SubsetMask b) { return a.bits_ < b.bits_; }

  // Calls fn(i) for every element, ascending.
  template <typename Fn>
  void for_each_element(Fn&& fn) const {
    uint64_t b = bits_;
    while (b) {
      fn(std::countr_zero(b));
      b &= b - 1;
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(cardinality()));
    for_each_element([&](int i) { out.push_back(i); });
    return out;
  }

  std::string to_string(int n) const;  // e.g. "{0, 3, 5}" over ground size n

 private:
  uint64_t bits_ = 0;
};

// The universe {0, ..., n-1}, 1 <= n <= 64.
struct GroundSet {
  int n;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 1 || n > kMaxGroundSize)
      throw ArgumentError("ground set size must be in [1, 64], got " + std::to_string(n));
  }
  SubsetMask universe() const { return SubsetMask::full_set(n); }
};

// Throws if the mask uses bits outside {0, ..., n-1}.
void validate_mask(SubsetMask s, int n);

// The set-function evaluation contract. Implementations must be
// deterministic (same mask -> bit-identical value), normalized
// (eval(empty) == 0 within 1e-9) and safe for concurrent read-only use.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int ground_size() const = 0;
  virtual double eval(SubsetMask s) const = 0;
  double operator()(SubsetMask s) const { return eval(s); }
};

// A set function defined by an arbitrary callable; handy in tests.
class LambdaSetFunction final : public SetFunction {
 public:
  LambdaSetFunction(int n, std::function<double(SubsetMask)> fn)
      : n_(n), fn_(std::move(fn)) {}
  int ground_size() const override { return n_; }
  double eval(SubsetMask s) const override { return fn_(s); }

 private:
  int n_;
  std::function<double(SubsetMask)> fn_;
};

// F(S) = sum of weights over S.
class ModularFunction final : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights) : weights_(std::move(weights)) {}
  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double eval(SubsetMask s) const override {
    double v = 0;
    s.for_each_element([&](int i) { v += weights_[static_cast<size_t>(i)]; });
    return v;
  }

 private:
  std::vector<double> weights_;
};

// rho_Omega(S) = F(Omega u S) - F(S); exactly 0 when Omega is a subset of S.
double marginal_gain(const SetFunction& f, SubsetMask omega, SubsetMask s);

// Transparent cache in front of another set function. Cache writes are
// serialized, so concurrent lookups observe the same values the inner
// function would produce.
class MemoizedEvaluator final : public SetFunction {
 public:
  explicit MemoizedEvaluator(const SetFunction& inner) : inner_(inner) {}
  int ground_size() const override { return inner_.ground_size(); }
  double eval(SubsetMask s) const override;
  uint64_t hits() const;
  uint64_t misses() const;

 private:
  const SetFunction& inner_;
  mutable std::mutex mu_;
  mutable std::unordered_map<uint64_t, double> cache_;
  mutable uint64_t hits_ = 0;
  mutable uint64_t misses_ = 0;
};

// Hard memory guard for full tabulation (2^n doubles).
inline constexpr int kMaxDenseTableBits = 20;

// All 2^n values of a set function, evaluated once up front. This is what
// the exhaustive certificate and oracle enumerations run against.
class DenseEvalTable final : public SetFunction {
 public:
  explicit DenseEvalTable(const SetFunction& f);
  int ground_size() const override { return n_; }
  double eval(SubsetMask s) const override { return values_[s.bits()]; }
  double value(uint64_t bits) const { return values_[bits]; }
  // rho_v(S) for v not in S.
  double gain(int v, SubsetMask s) const {
    return values_[s.bits() | (uint64_t{1} << v)] - values_[s.bits()];
  }
  double gain_of(SubsetMask omega, SubsetMask s) const {
    return values_[(omega | s).bits()] - values_[s.bits()];
  }

 private:
  int n_;
  std::vector<double> values_;
};

uint64_t binomial(int n, int k);

// All C(n,k) masks of cardinality k in ascending numeric order.
std::vector<SubsetMask> enumerate_k_subsets(int n, int k);

// Streaming version; fn(mask) is called in ascending numeric order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || n < 0 || k > n)
    throw ArgumentError("k-subset enumeration requires 0 <= k <= n");
  if (k == 0) {
    fn(SubsetMask::empty_set());
    return;
  }
  const uint64_t last = ((uint64_t{1} << k) - 1) << (n - k);
  uint64_t v = (uint64_t{1} << k) - 1;
  while (true) {
    fn(SubsetMask(v));
    if (v == last) break;
    // Gosper's hack: next mask with the same popcount.
    const uint64_t c = v & (~v + 1);
    const uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

inline constexpr int kDefaultFullEnumerationCap = 14;

// All 4^n ordered pairs (Omega, S): outer S ascending, inner Omega ascending.
// n above the cap signals a scale error unless explicitly overridden.
template <typename Fn>
void for_each_pair(int n, Fn&& fn, int cap = kDefaultFullEnumerationCap,
                   bool override_cap = false) {
  if (n < 0 || n > kMaxGroundSize) throw ArgumentError("invalid ground set size");
  if (n > cap && !override_cap)
    throw ScaleError("pair enumeration over n = " + std::to_string(n) +
                     " exceeds the cap of " + std::to_string(cap));
  const uint64_t top = uint64_t{1} << n;
  for (uint64_t s = 0; s < top; ++s)
    for (uint64_t om = 0; om < top; ++om) fn(SubsetMask(om), SubsetMask(s));
}

}  // namespace nsmax
