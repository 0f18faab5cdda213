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

#include "nsmax/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nsmax {

using ordered_json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// Generators

Matrix gen_gaussian_design(int n, int d, double corr, uint64_t seed) {
  if (n < 1 || d < 1) throw ArgumentError("design needs n >= 1 and d >= 1");
  if (!(corr >= 0.0) || corr >= 1.0)
    throw ArgumentError("design correlation must be in [0, 1)");

  Matrix cov(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cov(i, j) = (i == j) ? 1.0 : corr;
  const Matrix l = cholesky(cov);

  Rng rng(seed);
  Matrix x(d, n);
  std::vector<double> z(static_cast<size_t>(d));
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < d; ++i) z[static_cast<size_t>(i)] = rng.normal01();
    double norm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      double v = 0.0;
      for (int j = 0; j <= i; ++j) v += l(i, j) * z[static_cast<size_t>(j)];
      x(i, col) = v;
      norm2 += v * v;
    }
    const double norm = std::sqrt(norm2);
    for (int i = 0; i < d; ++i) x(i, col) /= norm;
  }
  return x;
}

Matrix gen_random_psd(int n, double eig_low, double eig_high, uint64_t seed) {
  if (n < 1) throw ArgumentError("psd generator needs n >= 1");
  if (!(eig_low >= 0.0) || eig_low > eig_high)
    throw ArgumentError("psd generator needs 0 <= eig_low <= eig_high");

  Rng rng(seed);
  std::vector<double> eig(static_cast<size_t>(n));
  for (double& v : eig) v = rng.uniform(eig_low, eig_high);

  // Random orthogonal basis: modified Gram-Schmidt on a Gaussian matrix.
  Matrix q(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) q(i, j) = rng.normal01();
  for (int j = 0; j < n; ++j) {
    for (int prev = 0; prev < j; ++prev) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += q(i, j) * q(i, prev);
      for (int i = 0; i < n; ++i) q(i, j) -= dot * q(i, prev);
    }
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += q(i, j) * q(i, j);
    const double norm = std::sqrt(norm2);
    for (int i = 0; i < n; ++i) q(i, j) /= norm;
  }

  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += q(i, k) * eig[static_cast<size_t>(k)] * q(j, k);
      out(i, j) = out(j, i) = v;
    }
  return out;
}

lp::PolytopeSpec gen_random_lp(int n, int m, uint64_t seed, double a_scale) {
  if (n < 1 || m < 1) throw ArgumentError("lp generator needs n >= 1 and m >= 1");
  if (!(a_scale > 0.0)) throw ArgumentError("a_scale must be > 0");
  Rng rng(seed);
  lp::PolytopeSpec p;
  p.a = Matrix(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.a(i, j) = a_scale * rng.uniform01();
  p.b.assign(static_cast<size_t>(m), 1.0);
  p.d.assign(static_cast<size_t>(n), 1.0);
  p.ubar.assign(static_cast<size_t>(n), 1.0);
  return p;
}

R2Config gen_r2_instance(int n, int m_obs, double corr, double noise, uint64_t seed) {
  if (n < 1 || m_obs < n + 2) throw ArgumentError("r2 generator needs m_obs > n + 1");
  if (!(corr >= 0.0) || corr >= 1.0) throw ArgumentError("r2 correlation must be in [0, 1)");
  if (!(noise >= 0.0)) throw ArgumentError("r2 noise must be >= 0");

  Matrix cov(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cov(i, j) = (i == j) ? 1.0 : corr;
  const Matrix l = cholesky(cov);

  Rng rng(seed);
  Matrix x(m_obs, n);
  std::vector<double> z(static_cast<size_t>(n));
  for (int row = 0; row < m_obs; ++row) {
    for (int j = 0; j < n; ++j) z[static_cast<size_t>(j)] = rng.normal01();
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k <= j; ++k) v += l(j, k) * z[static_cast<size_t>(k)];
      x(row, j) = v;
    }
  }
  std::vector<double> coeffs(static_cast<size_t>(n));
  for (double& c : coeffs) c = rng.uniform01();
  std::vector<double> target(static_cast<size_t>(m_obs));
  for (int row = 0; row < m_obs; ++row) {
    double v = 0.0;
    for (int j = 0; j < n; ++j) v += x(row, j) * coeffs[static_cast<size_t>(j)];
    target[static_cast<size_t>(row)] = v + noise * rng.normal01();
  }

  // Standardize: correlations among regressors and with the target.
  std::vector<double> mean(static_cast<size_t>(n), 0.0), sd(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int row = 0; row < m_obs; ++row) mean[static_cast<size_t>(j)] += x(row, j);
    mean[static_cast<size_t>(j)] /= m_obs;
    for (int row = 0; row < m_obs; ++row) {
      const double c = x(row, j) - mean[static_cast<size_t>(j)];
      sd[static_cast<size_t>(j)] += c * c;
    }
    sd[static_cast<size_t>(j)] = std::sqrt(sd[static_cast<size_t>(j)] / m_obs);
  }
  double tmean = 0.0, tsd = 0.0;
  for (double v : target) tmean += v;
  tmean /= m_obs;
  for (double v : target) tsd += (v - tmean) * (v - tmean);
  tsd = std::sqrt(tsd / m_obs);
  if (tsd <= 0.0) throw DegeneracyError("r2 generator produced a constant target");

  R2Config cfg;
  cfg.c = Matrix(n, n);
  cfg.b.assign(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      double v = 0.0;
      for (int row = 0; row < m_obs; ++row)
        v += (x(row, j) - mean[static_cast<size_t>(j)]) * (x(row, k) - mean[static_cast<size_t>(k)]);
      v /= m_obs * sd[static_cast<size_t>(j)] * sd[static_cast<size_t>(k)];
      cfg.c(j, k) = cfg.c(k, j) = v;
    }
    double v = 0.0;
    for (int row = 0; row < m_obs; ++row)
      v += (x(row, j) - mean[static_cast<size_t>(j)]) * (target[static_cast<size_t>(row)] - tmean);
    cfg.b[static_cast<size_t>(j)] = v / (m_obs * sd[static_cast<size_t>(j)] * tsd);
  }
  return cfg;
}

// --------------------------------------------------------------------------
// CSV ingestion

namespace {

bool try_parse_double(const std::string& tok, double* out) {
  try {
    size_t pos = 0;
    *out = std::stod(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    return pos == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

Matrix load_csv_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CSV file: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  size_t width = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    std::vector<double> row(cells.size());
    bool numeric = true;
    for (size_t j = 0; j < cells.size(); ++j)
      if (!try_parse_double(cells[j], &row[j])) {
        numeric = false;
        break;
      }
    if (!numeric) {
      if (first_content) {  // header row
        first_content = false;
        width = cells.size();
        continue;
      }
      throw ParseError("line " + std::to_string(lineno) + ": non-numeric cell in " + path);
    }
    if (first_content) {
      first_content = false;
      width = cells.size();
    } else if (cells.size() != width) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(width) + " cells, got " + std::to_string(cells.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("CSV file has no data rows: " + path);

  Matrix m(static_cast<int>(rows.size()), static_cast<int>(width));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < width; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

AOptConfig aopt_from_csv(const std::string& path, double beta, double sigma) {
  const Matrix raw = load_csv_matrix(path);  // rows = samples
  Matrix x = raw.transposed();               // d x n
  for (int j = 0; j < x.cols(); ++j) {
    double norm2 = 0.0;
    for (int i = 0; i < x.rows(); ++i) norm2 += x(i, j) * x(i, j);
    const double norm = std::sqrt(norm2);
    if (norm <= 0.0)
      throw ParseError("CSV column " + std::to_string(j) + " is all-zero, cannot normalize");
    for (int i = 0; i < x.rows(); ++i) x(i, j) /= norm;
  }
  return AOptConfig{std::move(x), beta, sigma};
}

// --------------------------------------------------------------------------
// Config parsing

namespace {

bool parse_bool(const std::string& v, int lineno) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ParseError("line " + std::to_string(lineno) + ": expected boolean, got '" + v + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (objective != "aopt" && objective != "det" && objective != "r2" &&
      objective != "lp" && objective != "tight")
    throw ArgumentError("unknown objective '" + objective + "'");
  if (repeats < 1) throw ArgumentError("repeats must be >= 1");
  if (k_min < 1 || k_min > k_max) throw ArgumentError("need 1 <= k_min <= k_max");
  if (objective != "tight" && k_max > n)
    throw ArgumentError("k_max exceeds the ground set size");
  if (format != OutputFormat::kJson && format != OutputFormat::kCsv)
    throw ArgumentError("format must be json or csv");
}

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(origin + " line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "objective") cfg.objective = val;
      else if (key == "n") cfg.n = std::stoi(val);
      else if (key == "d") cfg.d = std::stoi(val);
      else if (key == "m") cfg.m = std::stoi(val);
      else if (key == "m_obs") cfg.m_obs = std::stoi(val);
      else if (key == "corr") cfg.corr = std::stod(val);
      else if (key == "beta") cfg.beta = std::stod(val);
      else if (key == "sigma") cfg.sigma = std::stod(val);
      else if (key == "det_sigma") cfg.det_sigma = std::stod(val);
      else if (key == "eig_low") cfg.eig_low = std::stod(val);
      else if (key == "eig_high") cfg.eig_high = std::stod(val);
      else if (key == "noise") cfg.noise = std::stod(val);
      else if (key == "a_scale") cfg.a_scale = std::stod(val);
      else if (key == "gamma") cfg.tight_gamma = std::stod(val);
      else if (key == "alpha") cfg.tight_alpha = std::stod(val);
      else if (key == "dummies") cfg.tight_dummies = std::stoi(val);
      else if (key == "matrix_file") cfg.matrix_file = val;
      else if (key == "k_min") cfg.k_min = std::stoi(val);
      else if (key == "k_max") cfg.k_max = std::stoi(val);
      else if (key == "seed") cfg.seed = std::stoull(val);
      else if (key == "repeats") cfg.repeats = std::stoi(val);
      else if (key == "param_source")
        cfg.param_source = (val == "full") ? ParamSource::kFull : ParamSource::kGreedy;
      else if (key == "opt") cfg.compute_opt = parse_bool(val, lineno);
      else if (key == "timings") cfg.timings = parse_bool(val, lineno);
      else if (key == "output") cfg.output = val;
      else if (key == "format")
        cfg.format = (val == "csv") ? OutputFormat::kCsv : OutputFormat::kJson;
      else if (key == "full_cap") cfg.limits.full_cap = std::stoi(val);
      else if (key == "override_caps") cfg.limits.override_caps = parse_bool(val, lineno);
      else if (key == "opt_budget") cfg.opt_budget = std::stoull(val);
      else
        throw ParseError(origin + " line " + std::to_string(lineno) + ": unknown key '" +
                         key + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(origin + " line " + std::to_string(lineno) + ": bad value '" + val +
                       "' for key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  return parse_config(in, path);
}

// --------------------------------------------------------------------------
// Experiment runner

namespace {

struct PerRun {
  double ratio = 0.0;
  double gamma_greedy = 0.0;
  double alpha_greedy = 0.0;
  double alpha_total = 0.0;
  double bound_const_v = 0.0;
  double bound_k_v = 0.0;
  double greedy_value = 0.0;
  double opt_value = 0.0;
  double runtime = 0.0;
  bool pass = true;
};

ObjectiveConfig build_instance(const ExperimentConfig& cfg, int k, uint64_t seed_r) {
  if (cfg.objective == "aopt") {
    if (!cfg.matrix_file.empty()) return aopt_from_csv(cfg.matrix_file, cfg.beta, cfg.sigma);
    return AOptConfig{gen_gaussian_design(cfg.n, cfg.d, cfg.corr, seed_r), cfg.beta, cfg.sigma};
  }
  if (cfg.objective == "det")
    return DetConfig{gen_random_psd(cfg.n, cfg.eig_low, cfg.eig_high, seed_r), cfg.det_sigma};
  if (cfg.objective == "r2")
    return gen_r2_instance(cfg.n, cfg.m_obs, cfg.corr, cfg.noise, seed_r);
  if (cfg.objective == "lp") return gen_random_lp(cfg.n, cfg.m, seed_r, cfg.a_scale);
  return TightConfig{k, cfg.tight_gamma, cfg.tight_alpha, cfg.tight_dummies};
}

void aggregate(const std::vector<double>& xs, double* mean, double* sd) {
  double m = 0.0;
  for (double v : xs) m += v;
  m /= static_cast<double>(xs.size());
  double var = 0.0;
  if (xs.size() > 1) {
    for (double v : xs) var += (v - m) * (v - m);
    var /= static_cast<double>(xs.size() - 1);
  }
  *mean = m;
  if (sd) *sd = std::sqrt(var);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const int num_k = cfg.k_max - cfg.k_min + 1;
  std::vector<std::vector<PerRun>> runs(static_cast<size_t>(num_k));

  for (int rep = 0; rep < cfg.repeats; ++rep) {
    const uint64_t seed_r = Rng::child_seed(cfg.seed, static_cast<uint64_t>(rep));
    std::unique_ptr<SetFunction> objective;
    std::unique_ptr<MemoizedEvaluator> memo;
    if (cfg.objective != "tight") {
      objective = make_objective(build_instance(cfg, cfg.k_min, seed_r));
      memo = std::make_unique<MemoizedEvaluator>(*objective);
    }

    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      if (cfg.objective == "tight") {
        objective = make_objective(build_instance(cfg, k, seed_r));
        memo = std::make_unique<MemoizedEvaluator>(*objective);
      }
      PerRun run;

      const auto t0 = std::chrono::steady_clock::now();
      const GreedyTrace trace = run_greedy(*objective, k);
      const auto t1 = std::chrono::steady_clock::now();
      run.runtime = cfg.timings ? std::chrono::duration<double>(t1 - t0).count() : 0.0;

      const CertificateReport certs = compute_certificates(*memo, trace, k, cfg.limits);
      run.gamma_greedy = certs.gamma_greedy;
      run.alpha_greedy = certs.alpha_greedy;
      run.alpha_total = certs.alpha_total.value_or(0.0);

      double alpha_used = certs.alpha_greedy;
      double gamma_used = certs.gamma_greedy;
      if (cfg.param_source == ParamSource::kFull) {
        if (!certs.gamma_full.has_value())
          throw ScaleError("param_source = full needs n within the full cap");
        alpha_used = *certs.alpha_full;
        gamma_used = *certs.gamma_full;
      }
      run.bound_const_v = bound_const(alpha_used, gamma_used);
      run.bound_k_v = bound_K(alpha_used, gamma_used, k);
      run.greedy_value = memo->eval(trace.selected());

      if (cfg.compute_opt) {
        const OptResult opt = brute_force_opt(*memo, k, cfg.opt_budget);
        run.opt_value = opt.best_value;
        if (opt.best_value > kZeroTolerance) {
          run.ratio = run.greedy_value / opt.best_value;
          run.pass = run.greedy_value >= run.bound_k_v * opt.best_value - 1e-7;
        }
      }
      runs[static_cast<size_t>(k - cfg.k_min)].push_back(run);
    }
  }

  ExperimentResult result;
  for (int ki = 0; ki < num_k; ++ki) {
    const auto& rs = runs[static_cast<size_t>(ki)];
    ResultRow row;
    row.k = cfg.k_min + ki;
    std::vector<double> tmp(rs.size());
    auto col = [&](auto getter, double* mean, double* sd) {
      for (size_t i = 0; i < rs.size(); ++i) tmp[i] = getter(rs[i]);
      aggregate(tmp, mean, sd);
    };
    col([](const PerRun& r) { return r.ratio; }, &row.ratio_mean, &row.ratio_std);
    col([](const PerRun& r) { return r.gamma_greedy; }, &row.gamma_greedy_mean,
        &row.gamma_greedy_std);
    col([](const PerRun& r) { return r.alpha_greedy; }, &row.alpha_greedy_mean,
        &row.alpha_greedy_std);
    col([](const PerRun& r) { return r.alpha_total; }, &row.alpha_total_mean,
        &row.alpha_total_std);
    col([](const PerRun& r) { return r.bound_const_v; }, &row.bound_const_mean, nullptr);
    col([](const PerRun& r) { return r.bound_k_v; }, &row.bound_k_mean, nullptr);
    col([](const PerRun& r) { return r.greedy_value; }, &row.greedy_value_mean, nullptr);
    col([](const PerRun& r) { return r.opt_value; }, &row.opt_value_mean, nullptr);
    col([](const PerRun& r) { return r.runtime; }, &row.runtime_greedy_sec, nullptr);
    result.rows.push_back(row);

    for (size_t i = 0; i < rs.size(); ++i) {
      if (!rs[i].pass) {
        result.all_guarantees_pass = false;
        result.falsified.push_back("K=" + std::to_string(row.k) +
                                   " repeat=" + std::to_string(i));
      }
    }
  }
  return result;
}

// --------------------------------------------------------------------------
// Emission

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["objective"] = cfg.objective;
  j["n"] = cfg.n;
  if (cfg.objective == "aopt") {
    j["d"] = cfg.d;
    j["corr"] = cfg.corr;
    j["beta"] = cfg.beta;
    j["sigma"] = cfg.sigma;
    if (!cfg.matrix_file.empty()) j["matrix_file"] = cfg.matrix_file;
  } else if (cfg.objective == "det") {
    j["det_sigma"] = cfg.det_sigma;
    j["eig_low"] = cfg.eig_low;
    j["eig_high"] = cfg.eig_high;
  } else if (cfg.objective == "r2") {
    j["m_obs"] = cfg.m_obs;
    j["corr"] = cfg.corr;
    j["noise"] = cfg.noise;
  } else if (cfg.objective == "lp") {
    j["m"] = cfg.m;
    j["a_scale"] = cfg.a_scale;
  } else {
    j["gamma"] = cfg.tight_gamma;
    j["alpha"] = cfg.tight_alpha;
    j["dummies"] = cfg.tight_dummies;
  }
  j["k_min"] = cfg.k_min;
  j["k_max"] = cfg.k_max;
  j["seed"] = cfg.seed;
  j["repeats"] = cfg.repeats;
  j["param_source"] = cfg.param_source == ParamSource::kFull ? "full" : "greedy";
  j["opt"] = cfg.compute_opt;
  j["timings"] = cfg.timings;
  return j;
}

constexpr const char* kCsvColumns[] = {
    "K",
    "ratio_mean", "ratio_std",
    "gamma_greedy_mean", "gamma_greedy_std",
    "alpha_greedy_mean", "alpha_greedy_std",
    "alpha_total_mean", "alpha_total_std",
    "bound_const_mean", "bound_K_mean",
    "greedy_value_mean", "opt_value_mean",
    "runtime_greedy_sec",
};

std::vector<double> row_values(const ResultRow& r) {
  return {r.ratio_mean, r.ratio_std,
          r.gamma_greedy_mean, r.gamma_greedy_std,
          r.alpha_greedy_mean, r.alpha_greedy_std,
          r.alpha_total_mean, r.alpha_total_std,
          r.bound_const_mean, r.bound_k_mean,
          r.greedy_value_mean, r.opt_value_mean,
          r.runtime_greedy_sec};
}

}  // namespace

void write_json(const ExperimentConfig& cfg, const ExperimentResult& result,
                std::ostream& out) {
  ordered_json j;
  j["schema_version"] = 1;
  j["config"] = config_json(cfg);
  j["rows"] = ordered_json::array();
  for (const auto& row : result.rows) {
    ordered_json r;
    r["K"] = row.k;
    const auto vals = row_values(row);
    for (size_t c = 1; c < std::size(kCsvColumns); ++c) r[kCsvColumns[c]] = vals[c - 1];
    j["rows"].push_back(std::move(r));
  }
  j["all_guarantees_pass"] = result.all_guarantees_pass;
  j["falsified"] = result.falsified;
  out << j.dump(2) << "\n";
}

void write_csv(const ExperimentConfig& cfg, const ExperimentResult& result,
               std::ostream& out) {
  (void)cfg;
  for (size_t c = 0; c < std::size(kCsvColumns); ++c) {
    if (c) out << ",";
    out << kCsvColumns[c];
  }
  out << "\n";
  for (const auto& row : result.rows) {
    out << row.k;
    for (double v : row_values(row)) out << "," << fmt12(v);
    out << "\n";
  }
}

void run_and_emit(const ExperimentConfig& cfg, std::ostream& fallback) {
  const ExperimentResult result = run_experiment(cfg);

  std::ofstream file;
  std::ostream* out = &fallback;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) throw ArgumentError("cannot open output file: " + cfg.output);
    out = &file;
  }
  if (cfg.format == OutputFormat::kCsv)
    write_csv(cfg, result, *out);
  else
    write_json(cfg, result, *out);

  if (!result.all_guarantees_pass) {
    std::string what = "guarantee falsified at";
    for (const auto& f : result.falsified) what += " [" + f + "]";
    throw GuaranteeFalsified(what);
  }
}

}  // namespace nsmax
