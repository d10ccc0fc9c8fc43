#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace tcdict {

/// Threshold-correlation instance: vectors in the unit ball, non-negative
/// weights, threshold tau in [0, 1]. The objective for a unit vector x is
///   sum_i [ <x, v_i>^2 >= tau ] w_i <x, v_i>^2.
struct TCInstance {
  std::vector<Eigen::VectorXd> vectors;
  std::vector<double> weights;
  double tau = 0.0;

  int size() const { return static_cast<int>(vectors.size()); }
  int dim() const { return vectors.empty() ? 0 : static_cast<int>(vectors.front().size()); }

  /// Throws ContractViolation if any ||v_i|| > 1 + 1e-9, any w_i < 0,
  /// tau outside [0, 1], or the vectors have mixed dimensions.
  void validate() const;
};

/// Output of the bi-criteria solver. `objective` is the thresholded value
/// at `effective_threshold` (alpha * tau for the candidate scan), and
/// `hit_set` lists the indices clearing that threshold. A degenerate
/// solution (no usable candidate or all-zero weights) carries x = e1 and
/// objective 0.
struct TCSolution {
  Eigen::VectorXd x;
  double objective = 0.0;
  double effective_threshold = 0.0;
  std::vector<int> hit_set;
  bool degenerate = false;
};

/// Thresholded objective of `x` at `threshold`, plus the indices counted.
/// The comparison is a plain >= with no epsilon slack. Requires unit x
/// and threshold in [0, 1].
std::pair<double, std::vector<int>> evaluate(const TCInstance& instance,
                                             const Eigen::VectorXd& x,
                                             double threshold);

/// Candidate scan over the normalized input vectors, judged at the reduced
/// threshold alpha * tau with alpha = tau / 4. The winner attains at least
/// (tau^2 / 32) * Opt(tau). Ties break toward the smallest candidate index;
/// candidates with norm below 1e-12 are skipped. Output does not depend on
/// `threads`.
TCSolution solve_bicriteria(const TCInstance& instance, int threads = 1);

/// Exhaustive scan of the full-threshold objective over a uniform angular
/// grid of unit vectors; a lower bound on the true optimum. Supports
/// d in {1, 2, 3} and angular_resolution in (0, 0.1].
std::pair<double, Eigen::VectorXd> oracle_grid(const TCInstance& instance,
                                               double angular_resolution);

/// Randomized lower-bound oracle for any dimension: evaluates num_samples
/// uniform random unit vectors (deterministic per seed) plus every
/// normalized input vector, and returns the best.
std::pair<double, Eigen::VectorXd> oracle_sample(const TCInstance& instance,
                                                 int num_samples,
                                                 std::uint64_t seed);

}  // namespace tcdict
