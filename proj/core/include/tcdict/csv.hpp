#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace tcdict {

/// Shared matrix file format: one matrix row per line, comma-separated
/// decimal values, no header; dimensions inferred. Values are 64-bit
/// floats written with 17 significant digits, so read/write round-trips
/// bit-exactly.
Eigen::MatrixXd read_matrix_csv(std::istream& in, const std::string& source_name = "<stream>");
Eigen::MatrixXd read_matrix_csv_file(const std::string& path);

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);
void write_matrix_csv_file(const std::string& path, const Eigen::MatrixXd& m);

/// "%.17g" rendering used for every float written to CSV.
std::string format_double(double v);

}  // namespace tcdict
