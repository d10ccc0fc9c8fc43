#include "tcdict/outlier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tcdict/errors.hpp"
#include "tcdict/tc.hpp"

namespace tcdict {

namespace {

std::int64_t ceil_to_int64(double v) {
  const double c = std::ceil(v);
  if (!(c < 9.0e18)) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(c);
}

int outlier_budget(int n, double rho) {
  return static_cast<int>(std::floor(rho * n));
}

// Indices of the `count` largest values, ties toward the lower index.
std::vector<int> largest_indices(const std::vector<double>& values, int count) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return values[static_cast<size_t>(a)] > values[static_cast<size_t>(b)];
  });
  order.resize(static_cast<size_t>(std::min<size_t>(static_cast<size_t>(count), order.size())));
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

std::int64_t OutlierConfig::outlier_max_iters() const {
  const std::int64_t cap = ceil_to_int64(1.0 / delta());
  if (max_iters_override) return std::min(cap, *max_iters_override);
  return cap;
}

void OutlierConfig::validate() const {
  LearnConfig::validate();
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw ContractViolation("OutlierConfig: rho must lie in [0, 1)");
  }
}

double psi_hat(const std::vector<double>& norm_sq, double rho) {
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw ContractViolation("psi_hat: rho must lie in [0, 1)");
  }
  const int n = static_cast<int>(norm_sq.size());
  const int keep = n - outlier_budget(n, rho);
  std::vector<double> sorted = norm_sq;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (int i = 0; i < keep; ++i) total += sorted[static_cast<size_t>(i)];
  return total;
}

double psi_hat(const ResidualState& residuals, double rho) {
  std::vector<double> norm_sq(static_cast<size_t>(residuals.cols()));
  for (int i = 0; i < residuals.cols(); ++i) norm_sq[static_cast<size_t>(i)] = residuals.norm_sq(i);
  return psi_hat(norm_sq, rho);
}

OutlierResult outlier_dict_approx(const SignalMatrix& x, const OutlierConfig& config,
                                  int threads) {
  config.validate();

  const int n = x.cols();
  const double tau = config.tau();
  const double alpha_tau = config.alpha() * tau;
  const double frob_sq = x.frob_sq();
  const int budget = outlier_budget(n, config.rho);

  OutlierResult result;
  result.model.codes.assign(static_cast<size_t>(n), {});

  ResidualState state(x);

  auto declare_outliers = [&]() {
    std::vector<double> norms(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) norms[static_cast<size_t>(i)] = state.norm_sq(i);
    result.outlier_indices = largest_indices(norms, budget);
    result.psi_hat_final = psi_hat(state, config.rho);
  };

  // Nothing worth explaining: the trivial decomposition already meets the
  // error target.
  if (psi_hat(state, config.rho) < config.epsilon * frob_sq) {
    result.reason = TerminationReason::psi_floor;
    declare_outliers();
    return result;
  }

  std::vector<int> active;
  active.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (x.col_norm(i) > 0.0) active.push_back(i);
  }

  TCInstance instance;
  instance.tau = tau;
  instance.vectors.resize(active.size());
  instance.weights.resize(active.size());
  for (size_t a = 0; a < active.size(); ++a) {
    const double w = x.col_norm(active[a]);
    instance.weights[a] = w * w;
  }

  const double min_drop = config.delta() * frob_sq;
  const std::int64_t max_iters = config.outlier_max_iters();
  result.reason = TerminationReason::max_iters;

  for (std::int64_t t = 1; t <= max_iters; ++t) {
    for (size_t a = 0; a < active.size(); ++a) {
      instance.vectors[a] = state.residual(active[a]) / x.col_norm(active[a]);
    }
    const TCSolution sol = solve_bicriteria(instance, threads);
    if (sol.degenerate) {
      result.reason = TerminationReason::degenerate_tc;
      break;
    }

    // The phi drop of this iteration equals the sum of squared accepted
    // coefficients, so it can be measured before committing the update.
    std::vector<std::pair<int, double>> accepted;
    double drop = 0.0;
    for (int i : active) {
      const double ip = state.residual(i).dot(sol.x);
      const double col_sq = x.col_norm(i) * x.col_norm(i);
      if (ip * ip >= alpha_tau * col_sq) {
        accepted.emplace_back(i, ip);
        drop += ip * ip;
      }
    }
    if (drop < min_drop) {
      result.reason = TerminationReason::psi_floor;
      break;
    }

    const int atom_idx = result.model.atom_count();
    result.model.atoms.push_back(sol.x);
    for (const auto& [i, ip] : accepted) {
      const double coeff = state.apply_update(i, sol.x);
      result.model.codes[static_cast<size_t>(i)].emplace_back(atom_idx, coeff);
    }
    state.advance_iteration();

    result.trace.push_back({t, state.phi(), psi_hat(state, config.rho), drop});
  }

  declare_outliers();
  return result;
}

}  // namespace tcdict
