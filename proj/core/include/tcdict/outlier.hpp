#pragma once

#include <cstdint>
#include <vector>

#include "tcdict/learner.hpp"
#include "tcdict/residual.hpp"

namespace tcdict {

/// LearnConfig plus the outlier fraction rho in [0, 1). Derived stopping
/// threshold delta = beta epsilon^3 / (16 m lambda) on the normalized
/// per-iteration drop of phi.
struct OutlierConfig : LearnConfig {
  double rho = 0.0;

  double delta() const { return beta() * epsilon * epsilon * epsilon / (16.0 * m * lambda); }

  /// Iteration cap ceil(16 m lambda / (epsilon^3 beta)) = ceil(1 / delta),
  /// possibly tightened by max_iters_override.
  std::int64_t outlier_max_iters() const;

  void validate() const;
};

struct OutlierTraceRow {
  std::int64_t t = 0;
  double phi = 0.0;
  double psi_hat = 0.0;
  double phi_drop = 0.0;
};

struct OutlierResult {
  DictModel model;
  std::vector<int> outlier_indices;  // the floor(rho n) largest-residual columns
  double psi_hat_final = 0.0;
  std::vector<OutlierTraceRow> trace;
  TerminationReason reason = TerminationReason::max_iters;
};

/// psi_hat = min over size-(n - floor(rho n)) subsets T of sum_{i in T}
/// ||z_i||^2, i.e. the sum of the smallest n - floor(rho n) squared
/// residual norms.
double psi_hat(const ResidualState& residuals, double rho);
double psi_hat(const std::vector<double>& norm_sq, double rho);

/// Outlier-tolerant pursuit: identical iterations to dict_approx (applied
/// to every column), but the loop keeps only iterations whose phi drop is
/// at least delta * ||X||_F^2 and stops at the first that is not. If
/// psi_hat at initialization is already below epsilon * ||X||_F^2, returns
/// immediately with an empty model. The floor(rho n) columns with largest
/// final residual norm are declared outliers (ties toward lower index).
OutlierResult outlier_dict_approx(const SignalMatrix& x, const OutlierConfig& config,
                                  int threads = 1);

}  // namespace tcdict
