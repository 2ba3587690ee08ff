// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <array>

namespace grasp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

Mat3 skew(const Vec3& v);

// Axis-angle (rotation vector) to rotation matrix.
Mat3 rodrigues(const Vec3& aa);

// d rodrigues(aa) / d aa_i for i = 0..2. Exact for all magnitudes, with the
// analytic small-angle limit at ||aa|| -> 0.
std::array<Mat3, 3> rodrigues_jacobian(const Vec3& aa);

Vec3 axis_angle_from_matrix(const Mat3& R);

// Continuous 6-element rotation representation: the first two columns of the
// matrix, orthonormalized on decode (Gram-Schmidt).
Vec6 rot6d_from_matrix(const Mat3& R);
Mat3 rot6d_to_matrix(const Vec6& r);

// d vec(R) / d r, 9x6, for the Gram-Schmidt decode above. vec() stacks R
// column-by-column.
Eigen::Matrix<double, 9, 6> rot6d_jacobian(const Vec6& r);

// Angle of the relative rotation between two matrices, radians. Stable for
// very small angles (quaternion-based).
double rotation_angle_between(const Mat3& a, const Mat3& b);

}  // namespace grasp
