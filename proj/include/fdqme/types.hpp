// types.hpp - shared numeric aliases

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fdqme {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

} // namespace fdqme
