#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace tcdict {

/// Increment inequality for a unit vector u = sum_i coeffs[i] * atoms[i] + z
/// and a subspace T: with theta = ||u - P_T u||,
///   sum_i <u - P_T u, atoms[i]>^2 >= (theta^2 - ||z||^2)_+^2 / (4 sum_i coeffs[i]^2).
struct IncrementCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double theta = 0.0;
  bool pass = false;
};

/// Convexity inequality on per-column data:
///   sum_i (theta_i - gamma_i)_+^2 ||x_i||^2 >= (psi - gamma*)_+^2 ||X||_F^2
/// with psi and gamma* the ||x_i||^2-weighted means of theta_i and gamma_i.
struct ConvexityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double psi = 0.0;
  double gamma_star = 0.0;
  bool pass = false;
};

struct PerColumnData {
  std::vector<double> theta;
  std::vector<double> gamma;
  std::vector<double> col_norms_sq;
};

struct AnalysisReport {
  IncrementCheck increment;
  std::optional<ConvexityCheck> convexity;
  bool pass = false;
};

/// Verifies the increment inequality for the supplied exact decomposition
/// (u and atoms unit, t_basis orthonormal, u = sum coeffs[i] atoms[i] + z to
/// 1e-8), and the convexity inequality when per-column data is supplied.
/// `slack` is subtracted from each right-hand side before comparing.
/// Throws ContractViolation on malformed inputs.
AnalysisReport verify_analysis_inequalities(const Eigen::VectorXd& u,
                                            const std::vector<Eigen::VectorXd>& atoms,
                                            const std::vector<double>& coeffs,
                                            const Eigen::VectorXd& z,
                                            const std::vector<Eigen::VectorXd>& t_basis,
                                            const PerColumnData* per_column = nullptr,
                                            double slack = 0.0);

/// The convexity inequality alone, for data not tied to a decomposition.
ConvexityCheck check_convexity_bound(const PerColumnData& data, double slack = 0.0);

}  // namespace tcdict
