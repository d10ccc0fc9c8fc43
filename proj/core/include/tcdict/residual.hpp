#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tcdict/signal_matrix.hpp"

namespace tcdict {

/// (xi)_+ = max{0, xi}.
inline double positive_part(double xi) { return xi > 0.0 ? xi : 0.0; }

/// One greedy peel-off step: coeff = <z, v>, new_z = z - coeff * v.
/// Requires ||v|| = 1 (tolerance 1e-9); throws ContractViolation otherwise.
/// Postconditions: <new_z, v> ~ 0 and ||new_z||^2 = ||z||^2 - coeff^2 up to
/// float rounding.
std::pair<Eigen::VectorXd, double> residual_update(const Eigen::VectorXd& z,
                                                   const Eigen::VectorXd& v);

/// Per-column residuals z_i, support counts, and the potentials
/// phi = sum_i ||z_i||^2 and psi = phi / ||X||_F^2. Owned by exactly one
/// learning run at a time; squared norms are maintained incrementally
/// (each update subtracts the squared coefficient).
class ResidualState {
public:
  explicit ResidualState(const SignalMatrix& x);

  int cols() const { return static_cast<int>(residuals_.size()); }
  const Eigen::VectorXd& residual(int i) const { return residuals_[static_cast<size_t>(i)]; }

  /// Applies residual_update to column i and returns the coefficient.
  double apply_update(int i, const Eigen::VectorXd& v);

  int iteration() const { return t_; }
  void advance_iteration() { ++t_; }

  double phi() const { return phi_; }
  double psi() const;

  /// Bookkept ||z_i||^2 (initial ||x_i||^2 minus applied squared coeffs).
  double norm_sq(int i) const { return norm_sq_[static_cast<size_t>(i)]; }
  /// ||z_i||^2 accumulated from the stored vector, for cross-checking.
  double recompute_norm_sq(int i) const { return residuals_[static_cast<size_t>(i)].squaredNorm(); }
  /// Recomputed phi, for cross-checking the incremental bookkeeping.
  double recompute_phi() const;

  /// theta_i = ||z_i||^2 / ||x_i||^2; 0 for zero-norm input columns.
  double theta(int i) const;

  int support_count(int i) const { return support_counts_[static_cast<size_t>(i)]; }
  const std::vector<int>& support_counts() const { return support_counts_; }
  int max_support_count() const;

  double signal_frob_sq() const { return frob_sq_; }
  double signal_norm(int i) const { return col_norms_[static_cast<size_t>(i)]; }

private:
  std::vector<Eigen::VectorXd> residuals_;
  std::vector<double> norm_sq_;
  std::vector<int> support_counts_;
  std::vector<double> col_norms_;
  double frob_sq_ = 0.0;
  double phi_ = 0.0;
  int t_ = 0;
};

}  // namespace tcdict
