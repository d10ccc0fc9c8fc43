#include "tcdict/residual.hpp"

#include <algorithm>
#include <cmath>

#include "tcdict/errors.hpp"

namespace tcdict {

std::pair<Eigen::VectorXd, double> residual_update(const Eigen::VectorXd& z,
                                                   const Eigen::VectorXd& v) {
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw ContractViolation("residual_update: direction is not unit norm");
  }
  if (z.size() != v.size()) {
    throw ContractViolation("residual_update: dimension mismatch");
  }
  const double coeff = z.dot(v);
  return {z - coeff * v, coeff};
}

ResidualState::ResidualState(const SignalMatrix& x) {
  const int n = x.cols();
  residuals_.reserve(static_cast<size_t>(n));
  norm_sq_.reserve(static_cast<size_t>(n));
  col_norms_ = x.col_norms();
  support_counts_.assign(static_cast<size_t>(n), 0);
  frob_sq_ = x.frob_sq();
  for (int i = 0; i < n; ++i) {
    residuals_.emplace_back(x.column(i));
    const double nsq = col_norms_[static_cast<size_t>(i)] * col_norms_[static_cast<size_t>(i)];
    norm_sq_.push_back(nsq);
    phi_ += nsq;
  }
}

double ResidualState::apply_update(int i, const Eigen::VectorXd& v) {
  auto& z = residuals_[static_cast<size_t>(i)];
  auto [new_z, coeff] = residual_update(z, v);
  z = std::move(new_z);
  const double drop = coeff * coeff;
  norm_sq_[static_cast<size_t>(i)] = std::max(0.0, norm_sq_[static_cast<size_t>(i)] - drop);
  phi_ = std::max(0.0, phi_ - drop);
  ++support_counts_[static_cast<size_t>(i)];
  return coeff;
}

double ResidualState::psi() const {
  return frob_sq_ > 0.0 ? phi_ / frob_sq_ : 0.0;
}

double ResidualState::recompute_phi() const {
  double total = 0.0;
  for (const auto& z : residuals_) total += z.squaredNorm();
  return total;
}

double ResidualState::theta(int i) const {
  const double nrm = col_norms_[static_cast<size_t>(i)];
  if (nrm == 0.0) return 0.0;
  return norm_sq_[static_cast<size_t>(i)] / (nrm * nrm);
}

int ResidualState::max_support_count() const {
  int best = 0;
  for (int c : support_counts_) best = std::max(best, c);
  return best;
}

}  // namespace tcdict
