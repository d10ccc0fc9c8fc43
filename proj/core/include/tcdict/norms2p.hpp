#pragma once

#include <Eigen/Dense>

namespace tcdict {

/// 2->p norm instance: the rows of A are the correlation vectors, scaled
/// into the unit ball by row_scale = max_i ||row_i||.
struct NormInstance {
  Eigen::MatrixXd a;  // n x d
  double p = 4.0;

  double row_scale() const;

  /// Throws ContractViolation unless p > 2 and A is nonempty.
  void validate() const;
};

struct NormLowerBound {
  double value = 0.0;       // ||A witness||_p with ||witness|| = 1; a certified lower bound
  Eigen::VectorXd witness;  // unit vector
  double level = 0.0;       // threshold of the winning solver level; 0 for a direct row witness
};

/// ||A x||_p / ||x||_2. Throws ContractViolation on zero x.
double eval_2_to_p(const Eigen::MatrixXd& a, double p, const Eigen::VectorXd& x);

/// Lower bound for the 2->p norm via thresholded correlation: every
/// normalized row is tried as a direct witness, and for each level
/// tau_j = 2^-j (j = 0 .. ceil(log2(4n)) + ceil(p log2(1e6))) the
/// bi-criteria solver is run on the scaled rows with unit weights. The
/// returned value is exactly ||A witness||_p, so it never overstates the
/// norm. Ties keep the earliest candidate (rows first, then levels in
/// order).
NormLowerBound lower_bound_2_to_p(const NormInstance& instance, int threads = 1);

}  // namespace tcdict
