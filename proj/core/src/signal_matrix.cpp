#include "tcdict/signal_matrix.hpp"

#include <cmath>
#include <utility>

#include "tcdict/errors.hpp"

namespace tcdict {

SignalMatrix::SignalMatrix(Eigen::MatrixXd data) : data_(std::move(data)) {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw ContractViolation("SignalMatrix: need at least 1 row and 1 column");
  }
  if (!data_.allFinite()) {
    throw ContractViolation("SignalMatrix: entries must be finite");
  }
  col_norms_.resize(static_cast<size_t>(data_.cols()));
  for (int i = 0; i < data_.cols(); ++i) {
    col_norms_[static_cast<size_t>(i)] = data_.col(i).norm();
  }
  frob_sq_ = data_.squaredNorm();
}

}  // namespace tcdict
