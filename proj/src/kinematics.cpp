#include "shoulder/kinematics.hpp"

#include <cmath>

#include "shoulder/errors.hpp"

namespace shoulder {

CartesianPoint spherical_fk(const JointPose& pose, double r) {
    double ct = std::cos(pose.theta_flexion), st = std::sin(pose.theta_flexion);
    double cp = std::cos(pose.phi_abduction), sp = std::sin(pose.phi_abduction);
    return {r * ct * sp, r * st * sp, r * cp};
}

CartesianPoint serial_fk(const std::array<double, 3>& a, double r) {
    double reach = 1.0 + std::cos(a[1]) + std::cos(a[1] + a[2]);
    return {r * std::cos(a[0]) * reach, r * std::sin(a[0]) * reach,
            r * std::sin(a[1] + a[2]) + r * std::sin(a[1])};
}

Mat3 chain_rotation(double flexion, double abduction, double humeral) {
    return Mat3::rot_y(flexion) * Mat3::rot_x(-abduction) * Mat3::rot_z(humeral);
}

ChainAngles decompose_chain(const Mat3& R, double singular_tol_rad) {
    // R = Ry(a) Rx(b) Rz(c) with b = -abduction; R[1][2] = -sin(b)
    ChainAngles out;
    double sb = -R.m[5];
    sb = sb > 1.0 ? 1.0 : (sb < -1.0 ? -1.0 : sb);
    double b = std::asin(sb);
    out.abduction = -b;
    double cb = std::cos(b);
    out.near_singularity = std::fabs(cb) < std::sin(singular_tol_rad);
    if (std::fabs(cb) > 1e-12) {
        out.flexion = std::atan2(R.m[2], R.m[8]);
        out.humeral = std::atan2(R.m[3], R.m[4]);
    } else {
        // gimbal lock: only flexion +/- humeral is observable; pin humeral
        out.humeral = 0.0;
        out.flexion = (b < 0.0) ? std::atan2(-R.m[1], R.m[0]) : std::atan2(R.m[1], R.m[0]);
    }
    return out;
}

ChainAngles intrinsic_to_extrinsic(const std::array<double, 3>& motor_angles,
                                   const Mat3& mount, double singular_tol_rad) {
    if (!is_rotation(mount))
        throw RangeError("mount must be a proper rotation (orthonormal, det +1)");
    Mat3 R = mount * chain_rotation(motor_angles[0], motor_angles[1], motor_angles[2]) *
             mount.transposed();
    return decompose_chain(R, singular_tol_rad);
}

ChainAngles extrinsic_to_intrinsic(const std::array<double, 3>& anatomical_angles,
                                   const Mat3& mount, double singular_tol_rad) {
    if (!is_rotation(mount))
        throw RangeError("mount must be a proper rotation (orthonormal, det +1)");
    Mat3 R = mount.transposed() *
             chain_rotation(anatomical_angles[0], anatomical_angles[1], anatomical_angles[2]) *
             mount;
    return decompose_chain(R, singular_tol_rad);
}

bool detect_singularity(const JointPose& pose, double tol_rad) {
    double x = std::fmod(pose.phi_abduction, kPi);
    if (x < 0.0) x += kPi;
    return std::fabs(x - kPi / 2.0) < tol_rad;
}

Vec3 humeral_axis_direction(double flexion, double abduction) {
    Mat3 R = Mat3::rot_y(flexion) * Mat3::rot_x(-abduction);
    return R * Vec3{0.0, 0.0, 1.0};
}

} // namespace shoulder
