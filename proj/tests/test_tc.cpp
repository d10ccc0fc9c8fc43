#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "tcdict/errors.hpp"
#include "tcdict/tc.hpp"

using namespace tcdict;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

Eigen::VectorXd basis(int d, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
  v(i) = 1.0;
  return v;
}

TCInstance random_ball_instance(int d, int n, double tau, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  TCInstance instance;
  instance.tau = tau;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v(d);
    double nrm = 0.0;
    do {
      for (int j = 0; j < d; ++j) v(j) = gauss(rng);
      nrm = v.norm();
    } while (nrm == 0.0);
    instance.vectors.push_back(v * (unif(rng) / nrm));
    instance.weights.push_back(2.0 * unif(rng));
  }
  return instance;
}

// Same circle grid as the library oracle, evaluated with independent scalar
// loops instead of the library's objective path.
double circle_scan_reference(const TCInstance& instance, double resolution) {
  const long steps = static_cast<long>(std::ceil(2.0 * std::numbers::pi / resolution));
  double best = -1.0;
  for (long s = 0; s < steps; ++s) {
    const double theta = (2.0 * std::numbers::pi * static_cast<double>(s)) / static_cast<double>(steps);
    const double x0 = std::cos(theta);
    const double x1 = std::sin(theta);
    double value = 0.0;
    for (size_t i = 0; i < instance.vectors.size(); ++i) {
      const double ip = x0 * instance.vectors[i](0) + x1 * instance.vectors[i](1);
      if (ip * ip >= instance.tau) value += instance.weights[i] * ip * ip;
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace

TEST_CASE("evaluate: orthogonal, identity, and analytic cases") {
  {
    TCInstance inst{{basis(2, 1)}, {1.0}, 0.5};
    auto [value, hits] = evaluate(inst, basis(2, 0), 0.5);
    CHECK(value == 0.0);
    CHECK(hits.empty());
  }
  {
    TCInstance inst{{basis(2, 0)}, {1.0}, 1.0};
    auto [value, hits] = evaluate(inst, basis(2, 0), 1.0);
    CHECK(value == 1.0);
    CHECK(hits == std::vector<int>{0});
  }
  {
    TCInstance inst{{vec2(0.8, 0.6)}, {2.0}, 0.7};
    auto [v1, h1] = evaluate(inst, basis(2, 0), 0.7);
    CHECK(v1 == 0.0);  // 0.8^2 = 0.64 < 0.7
    CHECK(h1.empty());
    auto [v2, h2] = evaluate(inst, basis(2, 0), 0.5);
    CHECK(v2 == doctest::Approx(1.28));
    CHECK(h2 == std::vector<int>{0});
  }
}

TEST_CASE("evaluate rejects non-unit x and bad thresholds") {
  TCInstance inst{{basis(2, 0)}, {1.0}, 0.5};
  CHECK_THROWS_AS(evaluate(inst, vec2(0.5, 0), 0.5), ContractViolation);
  CHECK_THROWS_AS(evaluate(inst, basis(2, 0), 1.5), ContractViolation);
}

TEST_CASE("TCInstance validation") {
  TCInstance outside{{vec2(1.1, 0)}, {1.0}, 0.5};
  CHECK_THROWS_AS(outside.validate(), ContractViolation);
  TCInstance negw{{basis(2, 0)}, {-1.0}, 0.5};
  CHECK_THROWS_AS(negw.validate(), ContractViolation);
  TCInstance badtau{{basis(2, 0)}, {1.0}, 1.5};
  CHECK_THROWS_AS(badtau.validate(), ContractViolation);
}

TEST_CASE("solve_bicriteria on identical vectors") {
  const int n = 6;
  TCInstance inst;
  inst.tau = 1.0;
  for (int i = 0; i < n; ++i) {
    inst.vectors.push_back(basis(3, 0));
    inst.weights.push_back(1.0);
  }
  const TCSolution sol = solve_bicriteria(inst);
  CHECK_FALSE(sol.degenerate);
  CHECK(sol.effective_threshold == doctest::Approx(0.25));  // alpha * tau = tau^2 / 4
  CHECK(sol.objective == doctest::Approx(static_cast<double>(n)));
  CHECK(std::abs(sol.x(0)) == doctest::Approx(1.0));
  CHECK(static_cast<int>(sol.hit_set.size()) == n);
}

TEST_CASE("solve_bicriteria reduced threshold is tau^2/4 for any tau") {
  std::mt19937_64 rng(3);
  for (double tau : {0.05, 0.3, 0.77, 1.0}) {
    TCInstance inst = random_ball_instance(3, 5, tau, rng);
    const TCSolution sol = solve_bicriteria(inst);
    CHECK(sol.effective_threshold == tau * tau / 4.0);
  }
}

TEST_CASE("solve_bicriteria degenerate inputs") {
  {
    TCInstance inst{{Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(3)}, {1.0, 1.0}, 0.5};
    const TCSolution sol = solve_bicriteria(inst);
    CHECK(sol.degenerate);
    CHECK(sol.objective == 0.0);
    CHECK(sol.x == basis(3, 0));
  }
  {
    TCInstance inst{{basis(3, 1)}, {0.0}, 0.5};
    const TCSolution sol = solve_bicriteria(inst);
    CHECK(sol.degenerate);
  }
}

TEST_CASE("solve_bicriteria ties break toward the lowest index") {
  TCInstance inst{{basis(2, 1), basis(2, 0)}, {1.0, 1.0}, 0.8};
  const TCSolution sol = solve_bicriteria(inst);
  // both candidates score 1.0 on their own vector only
  CHECK(sol.x == basis(2, 1));
}

TEST_CASE("scaling the weights scales the objective and keeps the winner") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    TCInstance inst = random_ball_instance(3, 8, 0.3, rng);
    const TCSolution base = solve_bicriteria(inst);
    TCInstance scaled = inst;
    const double c = 7.25;
    for (double& w : scaled.weights) w *= c;
    const TCSolution out = solve_bicriteria(scaled);
    CHECK(out.x == base.x);
    CHECK(out.objective == doctest::Approx(c * base.objective).epsilon(1e-12));
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(31);
  TCInstance inst = random_ball_instance(4, 64, 0.2, rng);
  const TCSolution s1 = solve_bicriteria(inst, 1);
  for (int threads : {2, 3, 8}) {
    const TCSolution st = solve_bicriteria(inst, threads);
    CHECK(st.x == s1.x);
    CHECK(st.objective == s1.objective);
    CHECK(st.hit_set == s1.hit_set);
  }
}

TEST_CASE("tau = 0 reduces to the top singular direction") {
  std::mt19937_64 rng(41);
  TCInstance inst = random_ball_instance(3, 10, 0.0, rng);
  Eigen::MatrixXd weighted(3, 10);
  for (int i = 0; i < 10; ++i) {
    weighted.col(i) = std::sqrt(inst.weights[static_cast<size_t>(i)]) *
                      inst.vectors[static_cast<size_t>(i)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(weighted, Eigen::ComputeThinU);
  const Eigen::VectorXd top = svd.matrixU().col(0);
  const double sigma_sq = svd.singularValues()(0) * svd.singularValues()(0);

  auto [value, hits] = evaluate(inst, top, 0.0);
  CHECK(value == doctest::Approx(sigma_sq).epsilon(1e-10));
  CHECK(hits.size() == inst.vectors.size());

  double best_single = 0.0;
  for (size_t i = 0; i < inst.vectors.size(); ++i) {
    best_single = std::max(best_single,
                           inst.weights[i] * inst.vectors[i].squaredNorm());
  }
  const TCSolution sol = solve_bicriteria(inst);
  CHECK(sol.objective >= best_single * (1.0 - 1e-12));
}

TEST_CASE("oracle_grid analytic cases") {
  {
    Eigen::VectorXd v(1);
    v << 0.9;
    TCInstance inst{{v}, {1.0}, 0.5};
    auto [value, x] = oracle_grid(inst, 1e-3);
    CHECK(value == doctest::Approx(0.81));
    CHECK(std::abs(x(0)) == 1.0);
  }
  {
    TCInstance inst{{basis(2, 0), basis(2, 1)}, {1.0, 1.0}, 0.6};
    auto [value, x] = oracle_grid(inst, 1e-3);
    CHECK(value == doctest::Approx(1.0));  // only one axis clears 0.6 at a time
    const double ax = std::abs(x(0));
    const double ay = std::abs(x(1));
    CHECK(std::max(ax, ay) == doctest::Approx(1.0));
  }
}

TEST_CASE("oracle_grid matches an independent circle scan") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    TCInstance inst = random_ball_instance(2, 10, 0.25, rng);
    auto [value, x] = oracle_grid(inst, 2e-3);
    const double reference = circle_scan_reference(inst, 2e-3);
    CHECK(value == doctest::Approx(reference).epsilon(1e-12));
  }
}

TEST_CASE("oracle_grid rejects unsupported dimensions and resolutions") {
  TCInstance inst{{basis(4, 0)}, {1.0}, 0.5};
  CHECK_THROWS_AS(oracle_grid(inst, 1e-3), ContractViolation);
  TCInstance inst2{{basis(2, 0)}, {1.0}, 0.5};
  CHECK_THROWS_AS(oracle_grid(inst2, 0.5), ContractViolation);
}

TEST_CASE("oracle_grid covers d = 3") {
  TCInstance inst{{basis(3, 2)}, {2.0}, 0.5};
  auto [value, x] = oracle_grid(inst, 5e-2);
  CHECK(value == doctest::Approx(2.0));  // pole of the latitude grid is exact
}

TEST_CASE("oracle_sample basics") {
  {
    TCInstance inst{{basis(2, 0), basis(2, 1)}, {1.0, 3.0}, 0.5};
    auto [value, x] = oracle_sample(inst, 0, 1);
    CHECK(value == 3.0);  // best normalized input only
    CHECK(x == basis(2, 1));
  }
  {
    TCInstance inst;
    inst.tau = 0.9;
    for (int i = 0; i < 4; ++i) {
      inst.vectors.push_back(basis(5, 0));
      inst.weights.push_back(1.0);
    }
    auto [value, x] = oracle_sample(inst, 50, 2);
    CHECK(value == doctest::Approx(4.0));
  }
}

TEST_CASE("oracle_sample is deterministic per seed") {
  std::mt19937_64 rng(55);
  TCInstance inst = random_ball_instance(4, 9, 0.3, rng);
  auto [v1, x1] = oracle_sample(inst, 200, 12345);
  auto [v2, x2] = oracle_sample(inst, 200, 12345);
  CHECK(v1 == v2);
  CHECK(x1 == x2);
  auto [v3, x3] = oracle_sample(inst, 200, 54321);
  CHECK(v3 >= 0.0);  // different seed is fine, just a valid lower bound
}

TEST_CASE("bi-criteria guarantee against the grid oracle, d = 2") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const double tau = 0.3;
    TCInstance inst = random_ball_instance(2, 8, tau, rng);
    const TCSolution sol = solve_bicriteria(inst);
    auto [opt, x] = oracle_grid(inst, 1e-3);
    CHECK(sol.objective >= (tau * tau / 32.0) * opt - 1e-9);
  }
}

TEST_CASE("planted witness keeps a tau^2/32 fraction of the planted objective") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const int n = 4 + static_cast<int>(rng() % 9);
    const double tau = 0.1 + 0.8 * unif(rng);
    Eigen::VectorXd planted(d);
    do {
      for (int j = 0; j < d; ++j) planted(j) = gauss(rng);
    } while (planted.norm() == 0.0);
    planted /= planted.norm();

    TCInstance inst;
    inst.tau = tau;
    double planted_objective = 0.0;
    for (int i = 0; i < n; ++i) {
      // unit vector with <planted, v>^2 >= tau by construction
      const double c = std::sqrt(tau + (1.0 - tau) * unif(rng)) * (rng() % 2 ? 1.0 : -1.0);
      Eigen::VectorXd ortho(d);
      do {
        for (int j = 0; j < d; ++j) ortho(j) = gauss(rng);
        ortho -= ortho.dot(planted) * planted;
      } while (ortho.norm() < 1e-9);
      ortho /= ortho.norm();
      Eigen::VectorXd v = c * planted + std::sqrt(1.0 - c * c) * ortho;
      v /= std::max(1.0, v.norm());  // guard rounding just above 1
      inst.vectors.push_back(v);
      const double w = unif(rng) + 0.1;
      inst.weights.push_back(w);
      const double ip = planted.dot(v);
      planted_objective += w * ip * ip;
    }
    const TCSolution sol = solve_bicriteria(inst);
    CHECK_FALSE(sol.degenerate);
    CHECK(sol.objective >= (tau * tau / 32.0) * planted_objective * (1.0 - 1e-12));
  }
}
