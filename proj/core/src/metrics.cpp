#include "tcdict/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "tcdict/errors.hpp"

namespace tcdict {

RunMetrics eval_against_truth(const DictModel& model, const SignalMatrix& x,
                              const PlantedInstance& truth,
                              const LearnTrace* trace, const LearnConfig* config,
                              const std::vector<int>* declared_outliers) {
  const auto started = std::chrono::steady_clock::now();
  if (truth.x.cols() != x.cols() || truth.x.rows() != x.rows()) {
    throw ContractViolation("eval_against_truth: truth/X dimension mismatch");
  }
  if (model.signal_count() != x.cols()) {
    throw ContractViolation("eval_against_truth: model/X column mismatch");
  }
  model.validate(x.rows());

  RunMetrics metrics;
  if (config != nullptr) metrics.config = *config;
  metrics.gamma_star = truth.gamma_star_actual;
  metrics.lambda = truth.lambda_actual;
  metrics.atom_count = model.atom_count();
  metrics.max_sparsity = model.max_support();

  metrics.sparsity_histogram.assign(static_cast<size_t>(metrics.max_sparsity) + 1, 0);
  for (const auto& code : model.codes) {
    ++metrics.sparsity_histogram[code.size()];
  }

  const double err_sq = model.reconstruction_error_sq(x);
  metrics.psi_final = x.frob_sq() > 0.0 ? err_sq / x.frob_sq() : 0.0;

  if (trace != nullptr && config != nullptr) {
    metrics.bound_ratio_per_t.reserve(trace->rows.size());
    const double scale = config->beta() / (16.0 * config->m * config->lambda);
    for (const auto& row : trace->rows) {
      const double ratio = (row.psi - metrics.gamma_star) * scale * static_cast<double>(row.t);
      metrics.bound_ratio_per_t.push_back(ratio);
      if (ratio > 1.0 + 1e-9) metrics.bound_ok = false;
    }
  }

  if (declared_outliers != nullptr) {
    // psi_hat of the final decomposition: residual mass off the declared
    // outlier columns.
    double kept = 0.0;
    const std::set<int> declared(declared_outliers->begin(), declared_outliers->end());
    for (int i = 0; i < x.cols(); ++i) {
      if (declared.count(i)) continue;
      kept += (x.column(i) - model.reconstruct_column(i, x.rows())).squaredNorm();
    }
    metrics.psi_hat_final = kept;

    const std::set<int> planted(truth.outlier_indices.begin(), truth.outlier_indices.end());
    int overlap = 0;
    for (int i : declared) {
      if (planted.count(i)) ++overlap;
    }
    metrics.outlier_overlap =
        static_cast<double>(overlap) / std::max<size_t>(1, planted.size());

    if (config != nullptr) {
      double inlier_sq = 0.0;
      double opt_err = 0.0;
      for (int i : truth.inlier_indices) {
        inlier_sq += x.column(i).squaredNorm();
        opt_err += (x.column(i) - truth.truth.reconstruct_column(i, x.rows())).squaredNorm();
      }
      const double proof_bound = opt_err + config->epsilon * inlier_sq;
      if (proof_bound > 0.0) metrics.outlier_bound_ratio_proof = kept / proof_bound;
      const double thm_bound = (metrics.gamma_star + config->epsilon) * x.frob_sq();
      if (thm_bound > 0.0) metrics.outlier_bound_ratio_thm = kept / thm_bound;
    }
  }

  metrics.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  return metrics;
}

}  // namespace tcdict
