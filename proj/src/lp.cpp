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

#include "nsmax/lp.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace nsmax::lp {

namespace {

constexpr int kIterationSafetyLimit = 1000000;  // Bland terminates well before this

// Dense full-tableau primal simplex, maximizing. Rows: m constraints in
// standard form with slack variables; the initial basis is all slacks.
struct Tableau {
  int rows;
  int cols;                  // structural + slack
  std::vector<double> t;     // rows x (cols + 1), last column = rhs
  std::vector<double> cost;  // objective row (reduced costs), cols + 1
  std::vector<int> basis;    // per row, basic variable index

  double& at(int i, int j) { return t[static_cast<size_t>(i) * (cols + 1) + j]; }
  double at(int i, int j) const { return t[static_cast<size_t>(i) * (cols + 1) + j]; }
};

}  // namespace

void PolytopeSpec::validate() const {
  const int n = num_vars();
  const int m = num_rows();
  if (static_cast<int>(b.size()) != m || static_cast<int>(ubar.size()) != n ||
      static_cast<int>(d.size()) != n)
    throw ArgumentError("polytope dimensions mismatch");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) < 0.0) throw ArgumentError("polytope requires A >= 0 entrywise");
  for (double v : b)
    if (!(v >= 0.0)) throw ArgumentError("polytope requires b >= 0");
  for (double v : ubar)
    if (!(v >= 0.0)) throw ArgumentError("polytope requires ubar >= 0");
  for (double v : d)
    if (!std::isfinite(v)) throw ArgumentError("objective coefficients must be finite");
}

SimplexResult solve_restricted(const PolytopeSpec& p, SubsetMask s) {
  p.validate();
  const int n = p.num_vars();
  validate_mask(s, n);

  const auto support = s.elements();
  const int ns = static_cast<int>(support.size());
  const int m = p.num_rows();

  SimplexResult res;
  res.x.assign(static_cast<size_t>(n), 0.0);

  // Finite upper bounds on supported variables become extra rows.
  std::vector<int> ub_of;  // support position -> extra row, or -1
  int extra = 0;
  ub_of.assign(static_cast<size_t>(ns), -1);
  for (int j = 0; j < ns; ++j) {
    if (std::isfinite(p.ubar[static_cast<size_t>(support[static_cast<size_t>(j)])])) ub_of[static_cast<size_t>(j)] = extra++;
  }
  const int rows = m + extra;

  if (ns == 0) {
    res.basis.resize(static_cast<size_t>(m));
    res.degenerate = false;
    for (int i = 0; i < m; ++i) {
      res.basis[static_cast<size_t>(i)] = n + i;
      if (p.b[static_cast<size_t>(i)] <= kDegenerateTolerance) res.degenerate = true;
    }
    return res;
  }

  Tableau tb;
  tb.rows = rows;
  tb.cols = ns + rows;
  tb.t.assign(static_cast<size_t>(rows) * (tb.cols + 1), 0.0);
  tb.cost.assign(static_cast<size_t>(tb.cols) + 1, 0.0);
  tb.basis.resize(static_cast<size_t>(rows));

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < ns; ++j) tb.at(i, j) = p.a(i, support[static_cast<size_t>(j)]);
    tb.at(i, ns + i) = 1.0;
    tb.at(i, tb.cols) = p.b[static_cast<size_t>(i)];
    tb.basis[static_cast<size_t>(i)] = ns + i;
  }
  for (int j = 0; j < ns; ++j) {
    if (ub_of[static_cast<size_t>(j)] < 0) continue;
    const int r = m + ub_of[static_cast<size_t>(j)];
    tb.at(r, j) = 1.0;
    tb.at(r, ns + r) = 1.0;
    tb.at(r, tb.cols) = p.ubar[static_cast<size_t>(support[static_cast<size_t>(j)])];
    tb.basis[static_cast<size_t>(r)] = ns + r;
  }
  for (int j = 0; j < ns; ++j) tb.cost[static_cast<size_t>(j)] = p.d[static_cast<size_t>(support[static_cast<size_t>(j)])];

  int iterations = 0;
  while (true) {
    // Bland: entering variable = lowest index with positive reduced cost.
    int enter = -1;
    for (int j = 0; j < tb.cols; ++j) {
      if (tb.cost[static_cast<size_t>(j)] > kReducedCostTolerance) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;  // optimal

    // Ratio test; ties go to the row whose basic variable has the lowest label.
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < tb.rows; ++i) {
      const double coef = tb.at(i, enter);
      if (coef <= kReducedCostTolerance) continue;
      const double ratio = tb.at(i, tb.cols) / coef;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tb.basis[static_cast<size_t>(i)] < tb.basis[static_cast<size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw UnboundedError("restricted LP is unbounded on support " + s.to_string(n));

    // Pivot.
    const double piv = tb.at(leave, enter);
    for (int j = 0; j <= tb.cols; ++j) tb.at(leave, j) /= piv;
    for (int i = 0; i < tb.rows; ++i) {
      if (i == leave) continue;
      const double f = tb.at(i, enter);
      if (f == 0.0) continue;
      for (int j = 0; j <= tb.cols; ++j) tb.at(i, j) -= f * tb.at(leave, j);
    }
    const double fc = tb.cost[static_cast<size_t>(enter)];
    for (int j = 0; j <= tb.cols; ++j) tb.cost[static_cast<size_t>(j)] -= fc * tb.at(leave, j);
    tb.basis[static_cast<size_t>(leave)] = enter;

    if (++iterations > kIterationSafetyLimit)
      throw EvaluationError("simplex iteration safety limit exceeded");
  }

  res.iterations = iterations;
  res.basis.resize(static_cast<size_t>(tb.rows));
  for (int i = 0; i < tb.rows; ++i) {
    const int label = tb.basis[static_cast<size_t>(i)];
    const double val = tb.at(i, tb.cols);
    if (val <= kDegenerateTolerance) res.degenerate = true;
    if (label < ns) {
      res.basis[static_cast<size_t>(i)] = support[static_cast<size_t>(label)];
      res.x[static_cast<size_t>(support[static_cast<size_t>(label)])] = val;
    } else {
      res.basis[static_cast<size_t>(i)] = n + (label - ns);
    }
  }
  double value = 0.0;
  for (int j = 0; j < n; ++j) value += p.d[static_cast<size_t>(j)] * res.x[static_cast<size_t>(j)];
  res.value = value;
  return res;
}

std::vector<bool> degeneracy_report(const PolytopeSpec& p, int cap) {
  p.validate();
  const int n = p.num_vars();
  if (n > cap)
    throw ScaleError("degeneracy report over 2^" + std::to_string(n) +
                     " supports exceeds the cap");
  std::vector<bool> out(uint64_t{1} << n, false);
  for (uint64_t mbits = 0; mbits < out.size(); ++mbits)
    out[mbits] = solve_restricted(p, SubsetMask(mbits)).degenerate;
  return out;
}

namespace {

double parse_bound_token(const std::string& tok, int line) {
  if (tok == "inf" || tok == "+inf" || tok == "Inf") return kInfinity;
  try {
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad numeric token '" + tok + "'");
  }
}

// Next non-comment, non-blank line; returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

PolytopeSpec parse_polytope(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("empty LP input");

  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m) || n < 1 || m < 0)
    throw ParseError("line " + std::to_string(lineno) + ": header must start with 'n m'");

  PolytopeSpec p;
  p.d.resize(static_cast<size_t>(n));
  p.ubar.resize(static_cast<size_t>(n));
  std::string tok;
  for (int j = 0; j < n; ++j) {
    if (!(header >> tok))
      throw ParseError("line " + std::to_string(lineno) + ": header missing objective entry");
    p.d[static_cast<size_t>(j)] = parse_bound_token(tok, lineno);
  }
  for (int j = 0; j < n; ++j) {
    if (!(header >> tok))
      throw ParseError("line " + std::to_string(lineno) + ": header missing upper bound");
    p.ubar[static_cast<size_t>(j)] = parse_bound_token(tok, lineno);
  }

  p.a = Matrix(m, n);
  p.b.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                       " constraint rows");
    std::istringstream row(line);
    for (int j = 0; j < n; ++j) {
      if (!(row >> tok))
        throw ParseError("line " + std::to_string(lineno) + ": constraint row too short");
      p.a(i, j) = parse_bound_token(tok, lineno);
    }
    if (!(row >> tok))
      throw ParseError("line " + std::to_string(lineno) + ": constraint row missing bound");
    p.b[static_cast<size_t>(i)] = parse_bound_token(tok, lineno);
    if (row >> tok)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens in constraint row");
  }
  p.validate();
  return p;
}

void write_polytope(const PolytopeSpec& p, std::ostream& out) {
  const int n = p.num_vars();
  const int m = p.num_rows();
  out << n << " " << m;
  for (double v : p.d) out << " " << v;
  for (double v : p.ubar) {
    if (std::isinf(v))
      out << " inf";
    else
      out << " " << v;
  }
  out << "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) out << p.a(i, j) << " ";
    out << p.b[static_cast<size_t>(i)] << "\n";
  }
}

}  // namespace nsmax::lp
