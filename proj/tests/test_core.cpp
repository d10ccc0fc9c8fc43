#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "tcdict/errors.hpp"
#include "tcdict/model.hpp"
#include "tcdict/residual.hpp"
#include "tcdict/signal_matrix.hpp"

using namespace tcdict;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

Eigen::VectorXd random_unit(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(d);
  do {
    for (int i = 0; i < d; ++i) v(i) = gauss(rng);
  } while (v.norm() == 0.0);
  return v / v.norm();
}

}  // namespace

TEST_CASE("positive_part clamps at zero") {
  CHECK(positive_part(-0.3) == 0.0);
  CHECK(positive_part(0.0) == 0.0);
  CHECK(positive_part(2.5) == 2.5);
}

TEST_CASE("residual_update captures, ignores, and projects") {
  {
    auto [z, c] = residual_update(vec2(1, 0), vec2(1, 0));
    CHECK(c == 1.0);
    CHECK(z(0) == 0.0);
    CHECK(z(1) == 0.0);
  }
  {
    auto [z, c] = residual_update(vec2(1, 0), vec2(0, 1));
    CHECK(c == 0.0);
    CHECK(z(0) == 1.0);
  }
  {
    auto [z, c] = residual_update(vec2(3.0 / 5, 4.0 / 5), vec2(1, 0));
    CHECK(c == doctest::Approx(0.6));
    CHECK(z(0) == 0.0);
    CHECK(z(1) == doctest::Approx(0.8));
  }
}

TEST_CASE("residual_update rejects non-unit directions") {
  CHECK_THROWS_AS(residual_update(vec2(1, 0), vec2(0.9, 0)), ContractViolation);
  CHECK_THROWS_AS(residual_update(vec2(1, 0), vec2(1, 1)), ContractViolation);
}

TEST_CASE("residual_update postconditions on random inputs") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 8);
    Eigen::VectorXd z(d);
    for (int i = 0; i < d; ++i) z(i) = gauss(rng);
    const Eigen::VectorXd v = random_unit(d, rng);
    auto [nz, c] = residual_update(z, v);
    CHECK(std::abs(nz.dot(v)) <= 1e-10 * std::max(1.0, z.norm()));
    CHECK(std::abs(nz.squaredNorm() - (z.squaredNorm() - c * c)) <=
          1e-12 * std::max(1.0, z.squaredNorm()));
  }
}

TEST_CASE("telescoping Pythagorean identity over update sequences") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 4 + static_cast<int>(rng() % 6);
    Eigen::VectorXd z = 3.0 * random_unit(d, rng);
    const double initial_sq = z.squaredNorm();
    double coeff_sq = 0.0;
    for (int step = 0; step < 40; ++step) {
      auto [nz, c] = residual_update(z, random_unit(d, rng));
      z = nz;
      coeff_sq += c * c;
      CHECK(z.norm() <= std::sqrt(initial_sq) * (1.0 + 1e-12));
    }
    CHECK(std::abs(z.squaredNorm() - (initial_sq - coeff_sq)) <= 1e-8 * initial_sq);
  }
}

TEST_CASE("SignalMatrix caches norms consistently") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd data(7, 13);
  for (int i = 0; i < data.rows(); ++i) {
    for (int j = 0; j < data.cols(); ++j) data(i, j) = gauss(rng);
  }
  data.col(4).setZero();  // zero columns are legal
  const SignalMatrix x(data);
  double col_sum = 0.0;
  for (int i = 0; i < x.cols(); ++i) col_sum += x.col_norm(i) * x.col_norm(i);
  CHECK(std::abs(x.frob_sq() - col_sum) <= 1e-12 * x.frob_sq());
  CHECK(x.col_norm(4) == 0.0);
}

TEST_CASE("SignalMatrix rejects bad input") {
  CHECK_THROWS_AS(SignalMatrix(Eigen::MatrixXd(0, 3)), ContractViolation);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(2, 2);
  bad(1, 1) = std::nan("");
  CHECK_THROWS_AS(SignalMatrix(bad), ContractViolation);
}

TEST_CASE("ResidualState bookkeeping matches recomputation") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd data(6, 9);
  for (int i = 0; i < data.rows(); ++i) {
    for (int j = 0; j < data.cols(); ++j) data(i, j) = gauss(rng);
  }
  const SignalMatrix x(data);
  ResidualState state(x);
  CHECK(state.psi() == doctest::Approx(1.0));

  for (int step = 0; step < 25; ++step) {
    const Eigen::VectorXd v = random_unit(6, rng);
    for (int i = 0; i < x.cols(); ++i) state.apply_update(i, v);
    state.advance_iteration();
  }
  CHECK(std::abs(state.phi() - state.recompute_phi()) <= 1e-10 * x.frob_sq());
  for (int i = 0; i < x.cols(); ++i) {
    CHECK(std::abs(state.norm_sq(i) - state.recompute_norm_sq(i)) <=
          1e-10 * std::max(1.0, x.col_norm(i) * x.col_norm(i)));
    CHECK(state.norm_sq(i) <= x.col_norm(i) * x.col_norm(i) * (1.0 + 1e-12));
  }
  CHECK(state.iteration() == 25);
  CHECK(state.max_support_count() == 25);
}

TEST_CASE("DictModel validation catches broken models") {
  DictModel model;
  model.atoms.push_back(vec2(1, 0));
  model.codes.push_back({{0, 2.0}});
  CHECK_NOTHROW(model.validate(2));

  DictModel bad_atom = model;
  bad_atom.atoms[0] = vec2(0.5, 0);
  CHECK_THROWS_AS(bad_atom.validate(2), ContractViolation);

  DictModel bad_ref = model;
  bad_ref.codes[0].push_back({3, 1.0});
  CHECK_THROWS_AS(bad_ref.validate(2), ContractViolation);

  DictModel dup_ref = model;
  dup_ref.codes[0].push_back({0, -1.0});
  CHECK_THROWS_AS(dup_ref.validate(2), ContractViolation);
}

TEST_CASE("DictModel reconstruction") {
  DictModel model;
  model.atoms.push_back(vec2(1, 0));
  model.atoms.push_back(vec2(0, 1));
  model.codes.push_back({{0, 2.0}, {1, -1.0}});
  const Eigen::VectorXd r = model.reconstruct_column(0, 2);
  CHECK(r(0) == 2.0);
  CHECK(r(1) == -1.0);
  CHECK(model.max_support() == 2);
}
