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

#include "nsmax/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nsmax {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (!m.is_square()) throw ArgumentError(std::string(who) + " requires a square matrix");
}

void require_symmetric(const Matrix& m, const char* who, double tol) {
  require_square(m, who);
  const double scale = std::max(1.0, m.max_abs());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol * scale)
        throw ArgumentError(std::string(who) + " requires a symmetric matrix");
}

// In-place LU with partial pivoting. Returns the permutation sign, or 0 if a
// pivot fell below tolerance at column `*bad_col`.
int lu_factor(Matrix& a, std::vector<int>& perm, int* bad_col) {
  const int n = a.rows();
  perm.resize(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const double tol = kPivotRelTolerance * std::max(1e-300, a.max_abs());
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) <= tol) {
      if (bad_col) *bad_col = k;
      return 0;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      std::swap(perm[static_cast<size_t>(p)], perm[static_cast<size_t>(k)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j);
    }
  }
  return sign;
}

std::vector<double> lu_apply(const Matrix& lu, const std::vector<int>& perm,
                             const std::vector<double>& b) {
  const int n = lu.rows();
  std::vector<double> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = b[static_cast<size_t>(perm[static_cast<size_t>(i)])];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[static_cast<size_t>(i)] -= lu(i, j) * x[static_cast<size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[static_cast<size_t>(i)] -= lu(i, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] /= lu(i, i);
  }
  return x;
}

}  // namespace

Matrix::Matrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw ArgumentError("matrix data length must equal rows * cols");
  for (double v : data_)
    if (!std::isfinite(v)) throw ArgumentError("matrix entries must be finite");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Matrix Matrix::principal_submatrix(SubsetMask s) const {
  const auto idx = s.elements();
  Matrix out(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = (*this)(idx[i], idx[j]);
  return out;
}

Matrix Matrix::column_submatrix(SubsetMask s) const {
  const auto idx = s.elements();
  Matrix out(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double lu_det(const Matrix& m) {
  require_square(m, "lu_det");
  if (m.rows() == 0) return 1.0;
  Matrix a = m;
  std::vector<int> perm;
  const int sign = lu_factor(a, perm, nullptr);
  if (sign == 0) return 0.0;
  double det = sign;
  for (int i = 0; i < a.rows(); ++i) det *= a(i, i);
  return det;
}

std::vector<double> lu_solve(const Matrix& m, const std::vector<double>& b) {
  require_square(m, "lu_solve");
  if (b.size() != static_cast<size_t>(m.rows()))
    throw ArgumentError("lu_solve right-hand side length mismatch");
  Matrix a = m;
  std::vector<int> perm;
  int bad_col = -1;
  if (lu_factor(a, perm, &bad_col) == 0)
    throw ConditioningError("pivot below tolerance at column " + std::to_string(bad_col));
  return lu_apply(a, perm, b);
}

double trace_of_inverse(const Matrix& m) {
  require_symmetric(m, "trace_of_inverse", 1e-10);
  const int n = m.rows();
  if (n == 0) return 0.0;
  Matrix a = m;
  std::vector<int> perm;
  int bad_col = -1;
  if (lu_factor(a, perm, &bad_col) == 0)
    throw ConditioningError("trace_of_inverse: pivot below tolerance at column " +
                            std::to_string(bad_col));
  double trace = 0.0;
  std::vector<double> e(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    e[static_cast<size_t>(i)] = 1.0;
    trace += lu_apply(a, perm, e)[static_cast<size_t>(i)];
    e[static_cast<size_t>(i)] = 0.0;
  }
  return trace;
}

SymEigenResult sym_eigen(const Matrix& m) {
  require_symmetric(m, "sym_eigen", 1e-10);
  const int n = m.rows();
  Matrix a = m;
  Matrix q = Matrix::identity(n);
  const double stop = 1e-12 * m.max_abs();

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) off = std::max(off, std::abs(a(p, r)));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apq = a(p, r);
        if (std::abs(apq) <= stop) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, r);
          a(k, p) = c * akp - s * akq;
          a(k, r) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(r, k);
          a(p, k) = c * apk - s * aqk;
          a(r, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkq = q(k, r);
          q(k, p) = c * qkp - s * qkq;
          q(k, r) = s * qkp + c * qkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SymEigenResult res;
  res.eigenvalues.resize(static_cast<size_t>(n));
  res.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    res.eigenvalues[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) res.eigenvectors(i, j) = q(i, order[static_cast<size_t>(j)]);
  }
  return res;
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const Matrix gram = (m.rows() <= m.cols()) ? m * m.transposed() : m.transposed() * m;
  const auto eig = sym_eigen(gram);
  return std::sqrt(std::max(0.0, eig.eigenvalues.front()));
}

Matrix cholesky(const Matrix& m) {
  require_symmetric(m, "cholesky", 1e-10);
  const int n = m.rows();
  const double tol = kPivotRelTolerance * std::max(1e-300, m.max_abs());
  Matrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= tol) throw ConditioningError("cholesky: matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = m(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

}  // namespace nsmax
