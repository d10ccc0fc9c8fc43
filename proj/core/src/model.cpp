#include "tcdict/model.hpp"

#include <cmath>
#include <set>
#include <string>

#include "tcdict/errors.hpp"

namespace tcdict {

int DictModel::max_support() const {
  size_t best = 0;
  for (const auto& code : codes) best = std::max(best, code.size());
  return static_cast<int>(best);
}

Eigen::VectorXd DictModel::reconstruct_column(int i, int dim) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (const auto& [atom_idx, coeff] : codes[static_cast<size_t>(i)]) {
    out += coeff * atoms[static_cast<size_t>(atom_idx)];
  }
  return out;
}

double DictModel::reconstruction_error_sq(const SignalMatrix& x) const {
  if (signal_count() != x.cols()) {
    throw ContractViolation("DictModel: code count does not match signal count");
  }
  double total = 0.0;
  for (int i = 0; i < x.cols(); ++i) {
    total += (x.column(i) - reconstruct_column(i, x.rows())).squaredNorm();
  }
  return total;
}

void DictModel::validate(int dim, double unit_tol) const {
  for (size_t j = 0; j < atoms.size(); ++j) {
    if (atoms[j].size() != dim) {
      throw ContractViolation("DictModel: atom " + std::to_string(j) + " has wrong dimension");
    }
    if (std::abs(atoms[j].norm() - 1.0) > unit_tol) {
      throw ContractViolation("DictModel: atom " + std::to_string(j) + " is not unit norm");
    }
  }
  for (size_t i = 0; i < codes.size(); ++i) {
    std::set<int> seen;
    for (const auto& [atom_idx, coeff] : codes[i]) {
      if (atom_idx < 0 || atom_idx >= atom_count()) {
        throw ContractViolation("DictModel: code " + std::to_string(i) +
                                " references missing atom " + std::to_string(atom_idx));
      }
      if (!seen.insert(atom_idx).second) {
        throw ContractViolation("DictModel: code " + std::to_string(i) +
                                " references atom " + std::to_string(atom_idx) + " twice");
      }
      if (!std::isfinite(coeff)) {
        throw ContractViolation("DictModel: non-finite coefficient in code " + std::to_string(i));
      }
    }
  }
}

}  // namespace tcdict
