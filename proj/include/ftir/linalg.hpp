#pragma once

#include <Eigen/Dense>

namespace ftir {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// B x K, column k = endmember spectrum k. Entries strictly positive (ENC)
// when produced by the decoder.
using EndmemberMatrix = Eigen::MatrixXd;

}  // namespace ftir
