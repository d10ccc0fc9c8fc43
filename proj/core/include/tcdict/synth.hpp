#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "tcdict/model.hpp"
#include "tcdict/signal_matrix.hpp"

namespace tcdict {

enum class DictKind { orthonormal, random_unit };

DictKind dict_kind_from_string(const std::string& name);
const char* to_string(DictKind kind);

struct SynthParams {
  int d = 8;
  int n = 32;
  int m = 4;
  int k = 2;
  double noise_ratio = 0.0;  // ||noise||_F^2 / ||A* Y*||_F^2, hit exactly
  double rho = 0.0;          // outlier fraction; floor(rho n) columns replaced
  DictKind dict_kind = DictKind::orthonormal;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Synthetic instance with exactly known ground truth. `truth` carries the
/// planted dictionary and codes (empty codes on outlier columns);
/// gamma_star_actual and lambda_actual are measured over the inliers, so
/// every bound stated in terms of (m, k, lambda, gamma*) can be checked
/// without slack.
struct PlantedInstance {
  SignalMatrix x;
  DictModel truth;
  std::vector<int> inlier_indices;
  std::vector<int> outlier_indices;
  std::vector<Eigen::VectorXd> outlier_columns;
  double gamma_star_actual = 0.0;
  double lambda_actual = 0.0;
  SynthParams params;
};

/// Deterministic per seed: identical parameters produce a bit-identical
/// instance.
PlantedInstance generate(const SynthParams& params);

}  // namespace tcdict
