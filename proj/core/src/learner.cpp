#include "tcdict/learner.hpp"

#include <cmath>
#include <limits>

#include "tcdict/errors.hpp"
#include "tcdict/residual.hpp"
#include "tcdict/tc.hpp"

namespace tcdict {

namespace {

std::int64_t ceil_to_int64(double v) {
  const double c = std::ceil(v);
  if (!(c < 9.0e18)) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(c);
}

}  // namespace

std::int64_t LearnConfig::max_iters() const {
  if (max_iters_override) return *max_iters_override;
  return ceil_to_int64(16.0 * m * lambda / (beta() * epsilon));
}

std::int64_t LearnConfig::sparsity_cap() const {
  return ceil_to_int64(1.0 / (alpha() * tau()));
}

void LearnConfig::validate() const {
  if (k < 1) throw ContractViolation("LearnConfig: k must be >= 1");
  if (m < 1) throw ContractViolation("LearnConfig: m must be >= 1");
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    throw ContractViolation("LearnConfig: lambda must be >= 1");
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ContractViolation("LearnConfig: epsilon must lie in (0, 1]");
  }
  if (max_iters_override && *max_iters_override < 1) {
    throw ContractViolation("LearnConfig: max_iters_override must be >= 1");
  }
  const double t = tau();
  if (!(t > 0.0 && t < 1.0)) {
    throw ContractViolation("LearnConfig: derived tau outside (0, 1)");
  }
}

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::max_iters: return "max_iters";
    case TerminationReason::degenerate_tc: return "degenerate_tc";
    case TerminationReason::psi_floor: return "psi_floor";
  }
  return "unknown";
}

LearnResult dict_approx(const SignalMatrix& x, const LearnConfig& config, int threads) {
  config.validate();

  const int n = x.cols();
  const double tau = config.tau();
  const double alpha_tau = config.alpha() * tau;
  const double objective_floor = 1e-15 * x.frob_sq();

  LearnResult result;
  result.model.codes.assign(static_cast<size_t>(n), {});

  ResidualState state(x);

  if (x.frob_sq() == 0.0) {
    result.trace.reason = TerminationReason::psi_floor;
    result.trace.psi_final = 0.0;
    return result;
  }

  // Columns with nonzero signal norm take part in the TC instances; the
  // normalized residuals z_i / ||x_i|| always stay in the unit ball.
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

  const std::int64_t max_iters = config.max_iters();
  result.trace.reason = TerminationReason::max_iters;

  for (std::int64_t t = 1; t <= max_iters; ++t) {
    for (size_t a = 0; a < active.size(); ++a) {
      instance.vectors[a] = state.residual(active[a]) / x.col_norm(active[a]);
    }
    const TCSolution sol = solve_bicriteria(instance, threads);
    if (sol.degenerate) {
      result.trace.reason = TerminationReason::degenerate_tc;
      break;
    }
    if (sol.objective <= objective_floor) {
      result.trace.reason = TerminationReason::psi_floor;
      break;
    }

    const int atom_idx = result.model.atom_count();
    result.model.atoms.push_back(sol.x);
    for (int i : active) {
      const double ip = state.residual(i).dot(sol.x);
      const double col_sq = x.col_norm(i) * x.col_norm(i);
      if (ip * ip >= alpha_tau * col_sq) {
        const double coeff = state.apply_update(i, sol.x);
        result.model.codes[static_cast<size_t>(i)].emplace_back(atom_idx, coeff);
      }
    }
    state.advance_iteration();

    result.trace.rows.push_back({t, state.psi(), state.phi(), sol.objective,
                                 result.model.atom_count(), state.max_support_count()});
  }

  result.trace.psi_final = state.psi();
  return result;
}

GammaStarReport compute_gamma_star(const SignalMatrix& x, const DictModel& truth) {
  std::vector<int> all(static_cast<size_t>(x.cols()));
  for (int i = 0; i < x.cols(); ++i) all[static_cast<size_t>(i)] = i;
  return compute_gamma_star(x, truth, all);
}

GammaStarReport compute_gamma_star(const SignalMatrix& x, const DictModel& truth,
                                   const std::vector<int>& columns) {
  if (truth.signal_count() != x.cols()) {
    throw ContractViolation("compute_gamma_star: truth does not match signal count");
  }
  GammaStarReport report;
  report.per_column.assign(static_cast<size_t>(x.cols()), 0.0);
  double err_total = 0.0;
  double mass_total = 0.0;
  for (int i : columns) {
    const double err = (x.column(i) - truth.reconstruct_column(i, x.rows())).squaredNorm();
    const double mass = x.col_norm(i) * x.col_norm(i);
    report.per_column[static_cast<size_t>(i)] = mass > 0.0 ? err / mass : 0.0;
    err_total += err;
    mass_total += mass;
  }
  report.gamma_star = mass_total > 0.0 ? err_total / mass_total : 0.0;
  return report;
}

}  // namespace tcdict
