#include "tcdict/norms2p.hpp"

#include <cmath>
#include <vector>

#include "tcdict/errors.hpp"
#include "tcdict/tc.hpp"

namespace tcdict {

namespace {

constexpr double kLevelFloor = 1e-6;

}  // namespace

double NormInstance::row_scale() const {
  double best = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) best = std::max(best, a.row(r).norm());
  return best;
}

void NormInstance::validate() const {
  if (a.rows() < 1 || a.cols() < 1) {
    throw ContractViolation("NormInstance: matrix must be nonempty");
  }
  if (!a.allFinite()) {
    throw ContractViolation("NormInstance: entries must be finite");
  }
  if (!(p > 2.0)) {
    throw ContractViolation("NormInstance: p must exceed 2");
  }
}

double eval_2_to_p(const Eigen::MatrixXd& a, double p, const Eigen::VectorXd& x) {
  const double xn = x.norm();
  if (xn == 0.0) {
    throw ContractViolation("eval_2_to_p: x must be nonzero");
  }
  const Eigen::VectorXd ax = a * x;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < ax.size(); ++i) {
    sum += std::pow(std::abs(ax(i)), p);
  }
  return std::pow(sum, 1.0 / p) / xn;
}

NormLowerBound lower_bound_2_to_p(const NormInstance& instance, int threads) {
  instance.validate();
  const int n = static_cast<int>(instance.a.rows());
  const int d = static_cast<int>(instance.a.cols());
  const double scale = instance.row_scale();

  NormLowerBound best;
  best.witness = Eigen::VectorXd::Zero(d);
  best.witness(0) = 1.0;
  if (scale == 0.0) return best;

  auto consider = [&](const Eigen::VectorXd& x, double level) {
    const double value = eval_2_to_p(instance.a, instance.p, x);
    if (value > best.value) {
      best.value = value;
      best.witness = x / x.norm();
      best.level = level;
    }
  };

  // Every normalized row is a witness in its own right; it guarantees
  // value >= max_i ||row_i||.
  for (int r = 0; r < n; ++r) {
    const double nrm = instance.a.row(r).norm();
    if (nrm > 0.0) consider(instance.a.row(r).transpose() / nrm, 0.0);
  }

  TCInstance tc;
  tc.vectors.reserve(static_cast<size_t>(n));
  tc.weights.assign(static_cast<size_t>(n), 1.0);
  for (int r = 0; r < n; ++r) {
    tc.vectors.push_back(instance.a.row(r).transpose() / scale);
  }

  // Threshold grid by powers of two; it refines the single level the
  // optimum would fall into, down to a floor past which contributions are
  // negligible in double precision.
  const int levels = static_cast<int>(std::ceil(std::log2(4.0 * n))) +
                     static_cast<int>(std::ceil(instance.p * std::log2(1.0 / kLevelFloor)));
  for (int j = 0; j <= levels; ++j) {
    tc.tau = std::pow(2.0, -j);
    const TCSolution sol = solve_bicriteria(tc, threads);
    if (sol.degenerate) continue;
    consider(sol.x, tc.tau);
  }
  return best;
}

}  // namespace tcdict
