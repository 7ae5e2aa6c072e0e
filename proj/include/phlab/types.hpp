#pragma once

#include <Eigen/Dense>

namespace phlab {

constexpr int kMaxDim = 7;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

inline constexpr const char* kVersion = "1.0.0";

}  // namespace phlab
