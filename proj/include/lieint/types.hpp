#pragma once

#include <Eigen/Dense>

namespace lieint {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

} // namespace lieint
