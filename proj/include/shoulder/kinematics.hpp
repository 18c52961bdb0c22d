#ifndef SHOULDER_KINEMATICS_HPP
#define SHOULDER_KINEMATICS_HPP

#include <array>

#include "shoulder/geom.hpp"

namespace shoulder {

/// Full device state: gimbal angles (radians, unwrapped), the matching
/// angular velocities in the flexion/abduction/humeral slots, and time.
struct JointPose {
    double theta_flexion = 0.0;
    double phi_abduction = 0.0;
    double gamma_humeral = 0.0;
    std::array<double, 3> omega{0.0, 0.0, 0.0};  // rad/s per slot
    double timestamp = 0.0;
};

struct CartesianPoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

/// Elbow position of the single-joint-center model in spherical coordinates:
/// x = r cos(theta) sin(phi), y = r sin(theta) sin(phi), z = r cos(phi).
CartesianPoint spherical_fk(const JointPose& pose, double r);

/// End effector of the simplified 3-link comparison chain:
/// x = r cos(t1) (1 + cos(t2) + cos(t2+t3)),
/// y = r sin(t1) (1 + cos(t2) + cos(t2+t3)),
/// z = r sin(t2+t3) + r sin(t2).
CartesianPoint serial_fk(const std::array<double, 3>& angles, double r);

/// Gimbal rotation of the device chain: Ry(flexion) * Rx(-abduction) *
/// Rz(humeral). The chain's middle axis locks at |abduction| = 90 deg.
Mat3 chain_rotation(double flexion, double abduction, double humeral);

struct ChainAngles {
    double flexion = 0.0;
    double abduction = 0.0;
    double humeral = 0.0;
    bool near_singularity = false;
};

/// Inverse of chain_rotation. Within the singular band the humeral angle is
/// pinned to zero and the flag is set.
ChainAngles decompose_chain(const Mat3& R, double singular_tol_rad = deg2rad(2.0));

/// Motor-frame angles -> anatomical angles through the mount rotation
/// (exact conjugation, no linearization). Throws RangeError unless the
/// mount is a proper rotation.
ChainAngles intrinsic_to_extrinsic(const std::array<double, 3>& motor_angles,
                                   const Mat3& mount,
                                   double singular_tol_rad = deg2rad(2.0));

/// Anatomical angles -> motor-frame angles; exact inverse of the above.
ChainAngles extrinsic_to_intrinsic(const std::array<double, 3>& anatomical_angles,
                                   const Mat3& mount,
                                   double singular_tol_rad = deg2rad(2.0));

/// True iff |abduction mod 180deg - 90deg| < tol.
bool detect_singularity(const JointPose& pose, double tol_rad = deg2rad(2.0));

/// World direction of the humeral (axial) rotation axis for a pose; aligns
/// with the fixed flexion axis (+Y of the chain frame) at 90 deg abduction.
Vec3 humeral_axis_direction(double flexion, double abduction);

} // namespace shoulder

#endif
