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
// A small primal simplex solver for nonnegative polytopes
//   P = { x | 0 <= x <= ubar, A x <= b },  A >= 0, b >= 0,
// plus support-restricted solving: maximize d^T x over P with supp(x) in S.
// Bland's anti-cycling rule throughout; x = 0 is always feasible, so the
// slack basis starts every solve.
//

#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "nsmax/linalg.hpp"
#include "nsmax/subsets.hpp"

namespace nsmax::lp {

inline constexpr double kReducedCostTolerance = 1e-9;
inline constexpr double kDegenerateTolerance = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PolytopeSpec {
  Matrix a;                  // m x n, entrywise >= 0
  std::vector<double> b;     // m, >= 0
  std::vector<double> ubar;  // n upper bounds, >= 0, +inf allowed
  std::vector<double> d;     // n objective coefficients

  int num_vars() const { return a.cols(); }
  int num_rows() const { return a.rows(); }
  void validate() const;
};

struct SimplexResult {
  double value = 0.0;
  std::vector<double> x;    // full n-vector, zeros outside the support
  std::vector<int> basis;   // basic variable labels: j < s structural (as
                            // original element index), otherwise n + row
  bool degenerate = false;  // some basic variable sits at value <= 1e-9
  int iterations = 0;
};

// Maximizes d^T x over P with supp(x) <= S. Columns outside S are deleted;
// finite upper bounds become extra rows. S = empty returns value 0 at x = 0.
// Throws UnboundedError when the restricted LP is unbounded (possible only
// with infinite ubar entries).
SimplexResult solve_restricted(const PolytopeSpec& p, SubsetMask s);

// Degeneracy flag of the optimal basic feasible solution for every support
// set, indexed by mask bits. Used to decide whether the gamma_0 lower bound
// applies.
std::vector<bool> degeneracy_report(const PolytopeSpec& p,
                                    int cap = kDefaultFullEnumerationCap);

// Text format, one LP per stream:
//   header line:  n m d_1 ... d_n u_1 ... u_n   ('inf' allowed for u_i)
//   then m rows:  a_i1 ... a_in b_i
// '#' starts a comment; blank lines are skipped.
PolytopeSpec parse_polytope(std::istream& in);
void write_polytope(const PolytopeSpec& p, std::ostream& out);

}  // namespace nsmax::lp
