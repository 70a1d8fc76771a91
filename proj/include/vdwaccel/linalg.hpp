#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace vdwaccel {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline double levi_civita(int i, int j, int k) noexcept {
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

} // namespace vdwaccel
