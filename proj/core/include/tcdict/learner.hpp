#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcdict/model.hpp"
#include "tcdict/signal_matrix.hpp"

namespace tcdict {

/// Learning parameters. k, m and lambda describe the promised sparse
/// decomposition (lambda bounds ||Y_i||^2 / ||x_i||^2); epsilon is the
/// target accuracy. Derived quantities:
///   tau   = epsilon^2 / (16 k lambda)
///   alpha = tau / 4,  beta = tau^2 / 32
///   max iterations M = ceil(16 m lambda / (beta epsilon)) unless overridden.
struct LearnConfig {
  int k = 1;
  int m = 1;
  double lambda = 1.0;
  double epsilon = 0.5;
  std::optional<std::int64_t> max_iters_override;

  double tau() const { return epsilon * epsilon / (16.0 * k * lambda); }
  double alpha() const { return tau() / 4.0; }
  double beta() const { return tau() * tau() / 32.0; }

  /// Iteration budget: ceil(16 m lambda / (beta * epsilon)), saturated to
  /// int64 max, or the override when present.
  std::int64_t max_iters() const;

  /// Per-column support cap ceil(1 / (alpha * tau)): each accepted update
  /// removes at least alpha * tau * ||x_i||^2 of squared mass.
  std::int64_t sparsity_cap() const;

  /// Throws ContractViolation unless k, m >= 1, lambda >= 1, and
  /// epsilon in (0, 1].
  void validate() const;
};

enum class TerminationReason { max_iters, degenerate_tc, psi_floor };

const char* to_string(TerminationReason reason);

struct TraceRow {
  std::int64_t t = 0;
  double psi = 0.0;
  double phi = 0.0;
  double tc_objective = 0.0;
  int atoms_so_far = 0;
  int max_support_count = 0;
};

struct LearnTrace {
  std::vector<TraceRow> rows;
  TerminationReason reason = TerminationReason::max_iters;
  double psi_final = 0.0;
};

struct LearnResult {
  DictModel model;
  LearnTrace trace;
};

/// Greedy pursuit: each iteration solves the threshold-correlation problem
/// on the normalized residuals z_i / ||x_i|| with weights ||x_i||^2 and
/// threshold tau, appends the returned unit vector as a new atom, and peels
/// it off every column with <z_i, v>^2 >= alpha tau ||x_i||^2. Stops after
/// M iterations, on a degenerate solver output, or when the solver
/// objective falls to 1e-15 * ||X||_F^2. Output does not depend on
/// `threads`.
LearnResult dict_approx(const SignalMatrix& x, const LearnConfig& config, int threads = 1);

struct GammaStarReport {
  double gamma_star = 0.0;          // ||X - A Y||_F^2 / ||X||_F^2 over the given columns
  std::vector<double> per_column;   // gamma_i = ||(X - A Y)_i||^2 / ||x_i||^2 (0 for zero columns)
};

/// Relative reconstruction error of a known decomposition; columns may be
/// restricted (e.g. to a planted inlier set). ||X||_F = 0 yields 0.
GammaStarReport compute_gamma_star(const SignalMatrix& x, const DictModel& truth);
GammaStarReport compute_gamma_star(const SignalMatrix& x, const DictModel& truth,
                                   const std::vector<int>& columns);

}  // namespace tcdict
