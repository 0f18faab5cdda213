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
// Small dense real-matrix kernels backing the objective zoo. All inputs are
// tiny (tens of rows), so the implementations favor testable invariants over
// speed: partially pivoted LU, cyclic Jacobi for symmetric eigenproblems,
// classic Cholesky.
//

#pragma once

#include <vector>

#include "nsmax/errors.hpp"
#include "nsmax/subsets.hpp"

namespace nsmax {

// Row-major dense real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}
  Matrix(int rows, int cols, std::vector<double> data);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<double>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

  Matrix transposed() const;
  // Max absolute entry; 0 for an empty matrix.
  double max_abs() const;
  bool is_square() const { return rows_ == cols_; }

  // rho/col selections used to restrict objectives to a subset.
  Matrix principal_submatrix(SubsetMask s) const;  // rows and cols indexed by s
  Matrix column_submatrix(SubsetMask s) const;     // columns indexed by s

  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Relative pivot tolerance defining singular / indefinite.
inline constexpr double kPivotRelTolerance = 1e-12;

// Determinant via partially pivoted LU. The 0x0 matrix has determinant 1
// (empty product); a singular matrix returns 0.
double lu_det(const Matrix& m);

// Solves m x = b with partially pivoted LU. Throws ConditioningError when a
// pivot falls below tolerance.
std::vector<double> lu_solve(const Matrix& m, const std::vector<double>& b);

// Sum of diagonal entries of the inverse, via LU solves against unit vectors.
// Input must be symmetric positive definite.
double trace_of_inverse(const Matrix& m);

struct SymEigenResult {
  std::vector<double> eigenvalues;  // sorted descending
  Matrix eigenvectors;              // orthonormal columns, matching order
};

// Cyclic Jacobi sweeps until the largest off-diagonal entry drops below
// 1e-12 * max|entry| or 100 sweeps pass. Requires symmetry within 1e-10.
SymEigenResult sym_eigen(const Matrix& m);

// Largest singular value, via the top eigenvalue of M^T M (or M M^T,
// whichever is smaller).
double spectral_norm(const Matrix& m);

// Lower-triangular L with L L^T = m. Throws ConditioningError on an
// indefinite input.
Matrix cholesky(const Matrix& m);

}  // namespace nsmax
