#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace hartogs {

using Complex = std::complex<double>;

/// A point of C^n; index 0 is the distinguished coordinate z_0.
using CVector = Eigen::VectorXcd;

/// Dense n x n complex matrix. Used for g_{a\bar b}, Ric_{a\bar b} and
/// residual tensors; rows index the holomorphic slot, columns the
/// antiholomorphic one.
using HermitianMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMinDimension = 2;
inline constexpr std::size_t kMaxDimension = 8;

}  // namespace hartogs
