#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tcdict {

/// Observation matrix X in R^{d x n}. Columns are the signals; per-column
/// l2 norms and the squared Frobenius norm are cached at construction.
/// Immutable after construction. Zero-norm columns are legal; algorithms
/// skip them, since they contribute nothing to any potential.
class SignalMatrix {
public:
  explicit SignalMatrix(Eigen::MatrixXd data);

  int rows() const { return static_cast<int>(data_.rows()); }
  int cols() const { return static_cast<int>(data_.cols()); }

  const Eigen::MatrixXd& data() const { return data_; }
  Eigen::MatrixXd::ConstColXpr column(int i) const { return data_.col(i); }

  double col_norm(int i) const { return col_norms_[static_cast<size_t>(i)]; }
  const std::vector<double>& col_norms() const { return col_norms_; }

  /// ||X||_F^2, accumulated over all entries (independently of col_norms).
  double frob_sq() const { return frob_sq_; }

private:
  Eigen::MatrixXd data_;
  std::vector<double> col_norms_;
  double frob_sq_ = 0.0;
};

}  // namespace tcdict
