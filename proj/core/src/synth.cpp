#include "tcdict/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tcdict/errors.hpp"

namespace tcdict {

DictKind dict_kind_from_string(const std::string& name) {
  if (name == "orthonormal") return DictKind::orthonormal;
  if (name == "random_unit") return DictKind::random_unit;
  throw ContractViolation("unknown dictionary kind '" + name + "'");
}

const char* to_string(DictKind kind) {
  return kind == DictKind::orthonormal ? "orthonormal" : "random_unit";
}

void SynthParams::validate() const {
  if (d < 1 || n < 1 || m < 1 || k < 1) {
    throw ContractViolation("SynthParams: d, n, m, k must be >= 1");
  }
  if (k > m) throw ContractViolation("SynthParams: k must not exceed m");
  if (dict_kind == DictKind::orthonormal && m > d) {
    throw ContractViolation("SynthParams: orthonormal dictionaries need m <= d");
  }
  if (!(noise_ratio >= 0.0 && noise_ratio <= 0.5)) {
    throw ContractViolation("SynthParams: noise_ratio must lie in [0, 0.5]");
  }
  if (!(rho >= 0.0 && rho < 0.5)) {
    throw ContractViolation("SynthParams: rho must lie in [0, 0.5)");
  }
}

namespace {

// First `count` entries of a seeded Fisher-Yates pass over [0, limit).
std::vector<int> sample_distinct(int limit, int count, std::mt19937_64& rng) {
  std::vector<int> pool(static_cast<size_t>(limit));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, limit - 1);
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
  }
  pool.resize(static_cast<size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

PlantedInstance generate(const SynthParams& params) {
  params.validate();
  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const int d = params.d;
  const int n = params.n;
  const int m = params.m;

  // Dictionary.
  DictModel truth;
  truth.atoms.reserve(static_cast<size_t>(m));
  if (params.dict_kind == DictKind::orthonormal) {
    Eigen::MatrixXd g(d, m);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < d; ++i) g(i, j) = gauss(rng);
    }
    const Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ() * Eigen::MatrixXd::Identity(d, m);
    for (int j = 0; j < m; ++j) {
      truth.atoms.push_back(q.col(j) / q.col(j).norm());
    }
  } else {
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd col(d);
      double nrm = 0.0;
      do {
        for (int i = 0; i < d; ++i) col(i) = gauss(rng);
        nrm = col.norm();
      } while (nrm == 0.0);
      truth.atoms.push_back(col / nrm);
    }
  }

  // Outlier positions, then sparse codes for the inliers.
  const int budget = static_cast<int>(std::floor(params.rho * n));
  std::vector<int> outliers = sample_distinct(n, budget, rng);
  std::vector<bool> is_outlier(static_cast<size_t>(n), false);
  for (int i : outliers) is_outlier[static_cast<size_t>(i)] = true;

  truth.codes.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    if (is_outlier[static_cast<size_t>(i)]) continue;
    for (int atom : sample_distinct(m, params.k, rng)) {
      truth.codes[static_cast<size_t>(i)].emplace_back(atom, gauss(rng));
    }
  }

  Eigen::MatrixXd x(d, n);
  for (int i = 0; i < n; ++i) {
    x.col(i) = truth.reconstruct_column(i, d);
  }

  // Noise on the inlier columns, rescaled to hit the requested energy ratio
  // exactly rather than in expectation.
  if (params.noise_ratio > 0.0) {
    double clean_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!is_outlier[static_cast<size_t>(i)]) clean_sq += x.col(i).squaredNorm();
    }
    Eigen::MatrixXd noise = Eigen::MatrixXd::Zero(d, n);
    double noise_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      if (is_outlier[static_cast<size_t>(i)]) continue;
      for (int r = 0; r < d; ++r) noise(r, i) = gauss(rng);
      noise_sq += noise.col(i).squaredNorm();
    }
    if (noise_sq > 0.0) {
      noise *= std::sqrt(params.noise_ratio * clean_sq / noise_sq);
      x += noise;
    }
  }

  // Outlier columns: random directions with norms well above the inliers.
  std::vector<double> inlier_norms;
  inlier_norms.reserve(static_cast<size_t>(n - budget));
  for (int i = 0; i < n; ++i) {
    if (!is_outlier[static_cast<size_t>(i)]) inlier_norms.push_back(x.col(i).norm());
  }
  const double med = median(inlier_norms);
  std::uniform_real_distribution<double> norm_factor(2.0, 10.0);
  std::vector<Eigen::VectorXd> outlier_columns;
  outlier_columns.reserve(static_cast<size_t>(budget));
  for (int i : outliers) {
    Eigen::VectorXd dir(d);
    double nrm = 0.0;
    do {
      for (int r = 0; r < d; ++r) dir(r) = gauss(rng);
      nrm = dir.norm();
    } while (nrm == 0.0);
    const double target = norm_factor(rng) * std::max(med, 1.0e-3);
    x.col(i) = dir * (target / nrm);
    outlier_columns.push_back(x.col(i));
  }

  PlantedInstance instance{SignalMatrix(std::move(x)), std::move(truth), {}, std::move(outliers),
                           std::move(outlier_columns), 0.0, 0.0, params};

  instance.inlier_indices.reserve(static_cast<size_t>(n - budget));
  for (int i = 0; i < n; ++i) {
    if (!is_outlier[static_cast<size_t>(i)]) instance.inlier_indices.push_back(i);
  }

  double err_sq = 0.0;
  double mass_sq = 0.0;
  double lambda = 0.0;
  for (int i : instance.inlier_indices) {
    const auto col = instance.x.column(i);
    err_sq += (col - instance.truth.reconstruct_column(i, d)).squaredNorm();
    const double col_sq = col.squaredNorm();
    mass_sq += col_sq;
    double code_sq = 0.0;
    for (const auto& [atom, coeff] : instance.truth.codes[static_cast<size_t>(i)]) {
      code_sq += coeff * coeff;
    }
    if (col_sq > 0.0) lambda = std::max(lambda, code_sq / col_sq);
  }
  instance.gamma_star_actual = mass_sq > 0.0 ? err_sq / mass_sq : 0.0;
  instance.lambda_actual = lambda;
  return instance;
}

}  // namespace tcdict
