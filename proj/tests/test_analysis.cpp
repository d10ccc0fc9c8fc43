#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "tcdict/analysis.hpp"
#include "tcdict/errors.hpp"

using namespace tcdict;

namespace {

Eigen::VectorXd random_unit(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(d);
  do {
    for (int i = 0; i < d; ++i) v(i) = gauss(rng);
  } while (v.norm() == 0.0);
  return v / v.norm();
}

// Random orthonormal set spanning a dim-`size` subspace of R^d.
std::vector<Eigen::VectorXd> random_basis(int d, int size, std::mt19937_64& rng) {
  std::vector<Eigen::VectorXd> basis;
  while (static_cast<int>(basis.size()) < size) {
    Eigen::VectorXd v = random_unit(d, rng);
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() > 1e-6) basis.push_back(v / v.norm());
  }
  return basis;
}

struct Decomposition {
  Eigen::VectorXd u;
  std::vector<Eigen::VectorXd> atoms;
  std::vector<double> coeffs;
  Eigen::VectorXd z;
};

// u random unit, atoms random unit, coeffs random; z closes the identity
// exactly by construction.
Decomposition random_decomposition(int d, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Decomposition dec;
  dec.u = random_unit(d, rng);
  Eigen::VectorXd combo = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < k; ++i) {
    dec.atoms.push_back(random_unit(d, rng));
    dec.coeffs.push_back(gauss(rng));
    combo += dec.coeffs.back() * dec.atoms.back();
  }
  dec.z = dec.u - combo;
  return dec;
}

}  // namespace

TEST_CASE("single atom equal to u: lhs 1, rhs 1/4") {
  Eigen::VectorXd u(3);
  u << 1, 0, 0;
  const auto report =
      verify_analysis_inequalities(u, {u}, {1.0}, Eigen::VectorXd::Zero(3), {});
  CHECK(report.increment.theta == doctest::Approx(1.0));
  CHECK(report.increment.lhs == doctest::Approx(1.0));
  CHECK(report.increment.rhs == doctest::Approx(0.25));
  CHECK(report.pass);
}

TEST_CASE("large z kills the bound") {
  Eigen::VectorXd u(4), s(4);
  u << 1, 0, 0, 0;
  s << 0, 1, 0, 0;
  const double coeff = 0.05;
  const Eigen::VectorXd z = u - coeff * s;  // ||z||^2 = 1.0025 > theta^2 = 1
  const auto report = verify_analysis_inequalities(u, {s}, {coeff}, z, {});
  CHECK(report.increment.rhs == 0.0);
  CHECK(report.pass);
}

TEST_CASE("violated decomposition identity is rejected") {
  Eigen::VectorXd u(3);
  u << 1, 0, 0;
  Eigen::VectorXd z(3);
  z << 0.1, 0, 0;  // u != 1*u + z
  CHECK_THROWS_AS(verify_analysis_inequalities(u, {u}, {1.0}, z, {}), ContractViolation);
}

TEST_CASE("non-orthonormal t_basis is rejected") {
  std::mt19937_64 rng(13);
  const Eigen::VectorXd u = random_unit(4, rng);
  const Eigen::VectorXd b = random_unit(4, rng);
  CHECK_THROWS_AS(
      verify_analysis_inequalities(u, {u}, {1.0}, Eigen::VectorXd::Zero(4), {b, b}),
      ContractViolation);
}

TEST_CASE("random decompositions never violate the increment bound") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % 5);
    const int t_dim = static_cast<int>(rng() % static_cast<unsigned>(d));
    const Decomposition dec = random_decomposition(d, k, rng);
    const auto basis = random_basis(d, t_dim, rng);
    const auto report =
        verify_analysis_inequalities(dec.u, dec.atoms, dec.coeffs, dec.z, basis, nullptr, 1e-10);
    CHECK(report.pass);
  }
}

TEST_CASE("convexity bound on random per-column data") {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    PerColumnData data;
    for (int i = 0; i < n; ++i) {
      data.theta.push_back(unif(rng));
      data.gamma.push_back(unif(rng));
      data.col_norms_sq.push_back(4.0 * unif(rng));
    }
    const auto check = check_convexity_bound(data, 1e-10);
    CHECK(check.pass);
  }
}

TEST_CASE("convexity bound is tight for constant columns") {
  // theta_i - gamma_i constant over equal-mass columns: equality holds.
  PerColumnData data;
  for (int i = 0; i < 5; ++i) {
    data.theta.push_back(0.8);
    data.gamma.push_back(0.3);
    data.col_norms_sq.push_back(2.0);
  }
  const auto check = check_convexity_bound(data);
  CHECK(check.lhs == doctest::Approx(check.rhs).epsilon(1e-12));
  CHECK(check.psi == doctest::Approx(0.8));
  CHECK(check.gamma_star == doctest::Approx(0.3));
}

TEST_CASE("full report combines both inequalities") {
  std::mt19937_64 rng(303);
  const Decomposition dec = random_decomposition(6, 3, rng);
  PerColumnData data;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 8; ++i) {
    data.theta.push_back(unif(rng));
    data.gamma.push_back(unif(rng));
    data.col_norms_sq.push_back(1.0);
  }
  const auto report = verify_analysis_inequalities(dec.u, dec.atoms, dec.coeffs, dec.z,
                                                   random_basis(6, 2, rng), &data, 1e-10);
  CHECK(report.convexity.has_value());
  CHECK(report.pass);
}
