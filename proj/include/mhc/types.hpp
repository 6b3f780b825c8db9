#pragma once

#include <Eigen/Dense>

namespace mhc {

using Vec  = Eigen::VectorXd;
using Mat  = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

}  // namespace mhc
