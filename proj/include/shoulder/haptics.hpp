#ifndef SHOULDER_HAPTICS_HPP
#define SHOULDER_HAPTICS_HPP

#include <array>

#include "shoulder/kinematics.hpp"
#include "shoulder/limits.hpp"
#include "shoulder/tendon.hpp"

namespace shoulder {

enum class Regime { FreeRom, TendonStretch };

/// One torque command for the three motors, Ncm, in the flexion/abduction/
/// humeral slots. All rendered torques are resistive: damping opposes the
/// velocity, the spring pushes the arm back toward the cone.
struct TorqueCommand {
    std::array<double, 3> tau_Ncm{0.0, 0.0, 0.0};
    Regime regime = Regime::FreeRom;
    double timestamp = 0.0;
};

/// Spring part of the torque law: K_p(phi) applied along the per-axis error,
/// zero when the pose is inside the free range of motion. The humeral slot
/// can run a scaled variant of the swing-axis model.
std::array<double, 3> spring_torque_Ncm(const AngularError& error, const TendonModel& model,
                                        double humeral_spring_scale = 1.0);

/// Full piecewise law. Inside the free ROM: tau = -b*omega. Outside:
/// tau = K_p(theta_e)*theta_e - b*omega. Components clamp to the ceiling.
TorqueCommand render_torque(const JointPose& pose, const AngularError& error,
                            const TendonModel& model, double damping_Nms_per_rad,
                            double ceiling_Ncm = 5.0, double humeral_spring_scale = 1.0);

/// Arc-length translation of uniaxial tensile data into joint space:
/// theta = displacement / r_ma, torque = load * r_ma.
struct RotationalSample {
    double theta_deg = 0.0;
    double torque_Ncm = 0.0;
};
RotationalSample tensile_to_rotational(double displacement_cm, double load_N,
                                       double moment_arm_m);

} // namespace shoulder

#endif
