#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tcdict/signal_matrix.hpp"

namespace tcdict {

/// One entry of a sparse coefficient column: (atom index, coefficient).
using CodeEntry = std::pair<int, double>;

/// Learned dictionary A' (unit columns) paired with column-sparse
/// coefficients Y'. codes[i] holds the nonzero entries of column i of Y',
/// each referencing a distinct atom index.
struct DictModel {
  std::vector<Eigen::VectorXd> atoms;
  std::vector<std::vector<CodeEntry>> codes;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int signal_count() const { return static_cast<int>(codes.size()); }

  /// Largest number of entries in any code column (k').
  int max_support() const;

  /// (A'Y')_i for signal column i.
  Eigen::VectorXd reconstruct_column(int i, int dim) const;

  /// ||X - A'Y'||_F^2.
  double reconstruction_error_sq(const SignalMatrix& x) const;

  /// Checks unit atoms (to unit_tol), valid and non-repeating atom
  /// references. Throws ContractViolation on failure.
  void validate(int dim, double unit_tol = 1e-9) const;
};

}  // namespace tcdict
