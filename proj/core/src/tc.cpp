#include "tcdict/tc.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "tcdict/errors.hpp"
#include "tcdict/parallel.hpp"

namespace tcdict {

namespace {

constexpr double kCandidateNormFloor = 1e-12;

Eigen::VectorXd first_basis_vector(int dim) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(std::max(dim, 1));
  e(0) = 1.0;
  return e;
}

// Thresholded objective without building the hit set.
double objective_only(const TCInstance& instance, const Eigen::VectorXd& x, double threshold) {
  double value = 0.0;
  for (size_t i = 0; i < instance.vectors.size(); ++i) {
    const double ip = x.dot(instance.vectors[i]);
    const double sq = ip * ip;
    if (sq >= threshold) value += instance.weights[i] * sq;
  }
  return value;
}

}  // namespace

void TCInstance::validate() const {
  if (vectors.size() != weights.size()) {
    throw ContractViolation("TCInstance: vector/weight count mismatch");
  }
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw ContractViolation("TCInstance: tau must lie in [0, 1]");
  }
  const int d = dim();
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) {
      throw ContractViolation("TCInstance: vector " + std::to_string(i) + " has wrong dimension");
    }
    if (vectors[i].norm() > 1.0 + 1e-9) {
      throw ContractViolation("TCInstance: vector " + std::to_string(i) + " lies outside the unit ball");
    }
    if (!(weights[i] >= 0.0)) {
      throw ContractViolation("TCInstance: weight " + std::to_string(i) + " is negative");
    }
  }
}

std::pair<double, std::vector<int>> evaluate(const TCInstance& instance,
                                             const Eigen::VectorXd& x,
                                             double threshold) {
  if (std::abs(x.norm() - 1.0) > 1e-9) {
    throw ContractViolation("evaluate: x is not unit norm");
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ContractViolation("evaluate: threshold must lie in [0, 1]");
  }
  double value = 0.0;
  std::vector<int> hits;
  for (size_t i = 0; i < instance.vectors.size(); ++i) {
    const double ip = x.dot(instance.vectors[i]);
    const double sq = ip * ip;
    if (sq >= threshold) {
      value += instance.weights[i] * sq;
      hits.push_back(static_cast<int>(i));
    }
  }
  return {value, hits};
}

TCSolution solve_bicriteria(const TCInstance& instance, int threads) {
  instance.validate();
  const int n = instance.size();
  const double effective = instance.tau * instance.tau / 4.0;  // alpha * tau with alpha = tau/4

  double weight_total = 0.0;
  for (double w : instance.weights) weight_total += w;

  std::vector<int> candidates;
  candidates.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (instance.vectors[static_cast<size_t>(i)].norm() >= kCandidateNormFloor) {
      candidates.push_back(i);
    }
  }

  TCSolution sol;
  sol.effective_threshold = effective;
  if (candidates.empty() || weight_total == 0.0) {
    sol.x = first_basis_vector(instance.dim());
    sol.degenerate = true;
    return sol;
  }

  // Score every candidate independently, then reduce sequentially so the
  // winner (max value, lowest index on ties) is thread-count invariant.
  std::vector<double> scores(candidates.size(), 0.0);
  parallel_for(0, static_cast<int>(candidates.size()), threads, [&](int c) {
    const auto& v = instance.vectors[static_cast<size_t>(candidates[static_cast<size_t>(c)])];
    const Eigen::VectorXd unit = v / v.norm();
    scores[static_cast<size_t>(c)] = objective_only(instance, unit, effective);
  });

  int best = 0;
  for (size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[static_cast<size_t>(best)]) best = static_cast<int>(c);
  }

  const auto& winner = instance.vectors[static_cast<size_t>(candidates[static_cast<size_t>(best)])];
  sol.x = winner / winner.norm();
  auto [value, hits] = evaluate(instance, sol.x, effective);
  sol.objective = value;
  sol.hit_set = std::move(hits);
  return sol;
}

std::pair<double, Eigen::VectorXd> oracle_grid(const TCInstance& instance,
                                               double angular_resolution) {
  instance.validate();
  if (!(angular_resolution > 0.0 && angular_resolution <= 0.1)) {
    throw ContractViolation("oracle_grid: angular_resolution must lie in (0, 0.1]");
  }
  const int d = instance.dim();
  if (d < 1 || d > 3) {
    throw ContractViolation("oracle_grid: only d in {1, 2, 3} supported; use oracle_sample");
  }

  double best_value = -1.0;
  Eigen::VectorXd best_x = first_basis_vector(d);
  auto consider = [&](const Eigen::VectorXd& x) {
    const double value = objective_only(instance, x, instance.tau);
    if (value > best_value) {
      best_value = value;
      best_x = x;
    }
  };

  if (d == 1) {
    Eigen::VectorXd x(1);
    x(0) = 1.0;
    consider(x);
    x(0) = -1.0;
    consider(x);
  } else if (d == 2) {
    const long steps = static_cast<long>(std::ceil(2.0 * std::numbers::pi / angular_resolution));
    Eigen::VectorXd x(2);
    for (long s = 0; s < steps; ++s) {
      const double theta = (2.0 * std::numbers::pi * static_cast<double>(s)) / static_cast<double>(steps);
      x(0) = std::cos(theta);
      x(1) = std::sin(theta);
      consider(x);
    }
  } else {
    const long polar_steps = static_cast<long>(std::ceil(std::numbers::pi / angular_resolution));
    const long azim_steps = static_cast<long>(std::ceil(2.0 * std::numbers::pi / angular_resolution));
    Eigen::VectorXd x(3);
    for (long a = 0; a <= polar_steps; ++a) {
      const double theta = (std::numbers::pi * static_cast<double>(a)) / static_cast<double>(polar_steps);
      const double st = std::sin(theta);
      const double ct = std::cos(theta);
      for (long b = 0; b < azim_steps; ++b) {
        const double phi = (2.0 * std::numbers::pi * static_cast<double>(b)) / static_cast<double>(azim_steps);
        x(0) = st * std::cos(phi);
        x(1) = st * std::sin(phi);
        x(2) = ct;
        consider(x);
        if (st == 0.0) break;  // poles collapse to one point
      }
    }
  }
  return {best_value, best_x};
}

std::pair<double, Eigen::VectorXd> oracle_sample(const TCInstance& instance,
                                                 int num_samples,
                                                 std::uint64_t seed) {
  instance.validate();
  if (num_samples < 0) {
    throw ContractViolation("oracle_sample: num_samples must be non-negative");
  }
  const int d = instance.dim();
  double best_value = -1.0;
  Eigen::VectorXd best_x = first_basis_vector(d);
  auto consider = [&](const Eigen::VectorXd& x) {
    const double value = objective_only(instance, x, instance.tau);
    if (value > best_value) {
      best_value = value;
      best_x = x;
    }
  };

  for (const auto& v : instance.vectors) {
    const double nrm = v.norm();
    if (nrm >= kCandidateNormFloor) consider(v / nrm);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd x(d);
  for (int s = 0; s < num_samples; ++s) {
    double nrm = 0.0;
    do {
      for (int j = 0; j < d; ++j) x(j) = gauss(rng);
      nrm = x.norm();
    } while (nrm < kCandidateNormFloor);
    consider(x / nrm);
  }
  if (best_value < 0.0) best_value = 0.0;  // no usable direction at all
  return {best_value, best_x};
}

}  // namespace tcdict
