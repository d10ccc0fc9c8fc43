#pragma once

#include <optional>
#include <vector>

#include "tcdict/learner.hpp"
#include "tcdict/synth.hpp"

namespace tcdict {

/// Evaluation record for a finished run. When a trace and config are
/// available, bound_ratio_per_t[t-1] = (psi_t - gamma*) * beta * t / (16 m
/// lambda); values above 1 mean the convergence law was violated. Outlier
/// fields are populated when a declared outlier set is supplied.
struct RunMetrics {
  std::optional<LearnConfig> config;

  double psi_final = 0.0;
  int atom_count = 0;
  int max_sparsity = 0;
  double wall_time_ms = 0.0;
  std::vector<int> sparsity_histogram;  // index = support size

  double gamma_star = 0.0;
  double lambda = 0.0;

  std::vector<double> bound_ratio_per_t;
  bool bound_ok = true;

  std::optional<double> psi_hat_final;
  std::optional<double> outlier_overlap;  // |declared ∩ planted| / max(1, |planted|)
  std::optional<double> outlier_bound_ratio_proof;  // psi_hat / (||X - A*Y* - N*||^2 + eps ||X_I||^2)
  std::optional<double> outlier_bound_ratio_thm;    // psi_hat / ((gamma* + eps) ||X||^2)
};

/// Scores a model against planted ground truth: reconstruction error,
/// sparsity histogram, convergence-law ratios (when trace and config are
/// given), and outlier overlap (reported, not asserted). Throws
/// ContractViolation on dimension mismatch.
RunMetrics eval_against_truth(const DictModel& model, const SignalMatrix& x,
                              const PlantedInstance& truth,
                              const LearnTrace* trace = nullptr,
                              const LearnConfig* config = nullptr,
                              const std::vector<int>* declared_outliers = nullptr);

}  // namespace tcdict
