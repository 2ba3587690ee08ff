// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "graspkit/common/rotation.hpp"

#include <cmath>

namespace grasp {

Mat3 skew(const Vec3& v) {
    Mat3 m;
    m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
    return m;
}

Mat3 rodrigues(const Vec3& aa) {
    const double angle = aa.norm();
    if (angle < 1e-12) {
        return Mat3::Identity() + skew(aa);
    }
    const Vec3 axis = aa / angle;
    return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

std::array<Mat3, 3> rodrigues_jacobian(const Vec3& aa) {
    std::array<Mat3, 3> jac;
    const double n2 = aa.squaredNorm();
    if (n2 < 1e-14) {
        for (int i = 0; i < 3; ++i) jac[i] = skew(Vec3::Unit(i));
        return jac;
    }
    // Gallego & Yezzi closed form:
    //   dR/daa_i = (aa_i [aa]x + [aa x (I - R) e_i]x) / |aa|^2 * R
    const Mat3 R = rodrigues(aa);
    const Mat3 IminusR = Mat3::Identity() - R;
    const Mat3 aa_skew = skew(aa);
    for (int i = 0; i < 3; ++i) {
        const Vec3 cross = aa.cross(IminusR.col(i));
        jac[i] = ((aa[i] * aa_skew + skew(cross)) / n2) * R;
    }
    return jac;
}

Vec3 axis_angle_from_matrix(const Mat3& R) {
    const Eigen::AngleAxisd aa(R);
    return aa.axis() * aa.angle();
}

Vec6 rot6d_from_matrix(const Mat3& R) {
    Vec6 r;
    r.head<3>() = R.col(0);
    r.tail<3>() = R.col(1);
    return r;
}

Mat3 rot6d_to_matrix(const Vec6& r) {
    const Vec3 a1 = r.head<3>();
    const Vec3 a2 = r.tail<3>();
    const Vec3 b1 = a1.normalized();
    const Vec3 u = a2 - b1.dot(a2) * b1;
    const Vec3 b2 = u.normalized();
    const Vec3 b3 = b1.cross(b2);
    Mat3 R;
    R.col(0) = b1;
    R.col(1) = b2;
    R.col(2) = b3;
    return R;
}

Eigen::Matrix<double, 9, 6> rot6d_jacobian(const Vec6& r) {
    const Vec3 a1 = r.head<3>();
    const Vec3 a2 = r.tail<3>();
    const double n1 = a1.norm();
    const Vec3 b1 = a1 / n1;
    const double dot12 = b1.dot(a2);
    const Vec3 u = a2 - dot12 * b1;
    const double nu = u.norm();
    const Vec3 b2 = u / nu;

    const Mat3 P1 = (Mat3::Identity() - b1 * b1.transpose()) / n1;  // db1/da1
    const Mat3 du_db1 = -(dot12 * Mat3::Identity() + b1 * a2.transpose());
    const Mat3 du_da1 = du_db1 * P1;
    const Mat3 du_da2 = Mat3::Identity() - b1 * b1.transpose();
    const Mat3 P2 = (Mat3::Identity() - b2 * b2.transpose()) / nu;  // db2/du

    const Mat3 db1_da1 = P1;
    const Mat3 db2_da1 = P2 * du_da1;
    const Mat3 db2_da2 = P2 * du_da2;
    // b3 = b1 x b2  =>  db3 = -[b2]x db1 + [b1]x db2
    const Mat3 db3_da1 = -skew(b2) * db1_da1 + skew(b1) * db2_da1;
    const Mat3 db3_da2 = skew(b1) * db2_da2;

    Eigen::Matrix<double, 9, 6> J = Eigen::Matrix<double, 9, 6>::Zero();
    J.block<3, 3>(0, 0) = db1_da1;
    J.block<3, 3>(3, 0) = db2_da1;
    J.block<3, 3>(6, 0) = db3_da1;
    J.block<3, 3>(3, 3) = db2_da2;
    J.block<3, 3>(6, 3) = db3_da2;
    return J;
}

double rotation_angle_between(const Mat3& a, const Mat3& b) {
    const Eigen::Quaterniond qa(a), qb(b);
    const Eigen::Quaterniond rel = qa.conjugate() * qb;
    const double v = Vec3(rel.x(), rel.y(), rel.z()).norm();
    return 2.0 * std::atan2(v, std::abs(rel.w()));
}

}  // namespace grasp
