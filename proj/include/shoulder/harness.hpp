#ifndef SHOULDER_HARNESS_HPP
#define SHOULDER_HARNESS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "shoulder/coupling.hpp"
#include "shoulder/haptics.hpp"

namespace shoulder {

enum class TrajInterpolation { JointLinear, CartesianArc };

/// One target: travel time from the previous target, then a hold.
struct Waypoint {
    double travel_s = 0.0;
    double dwell_s = 0.0;
    double flexion_rad = 0.0;
    double abduction_rad = 0.0;
    double humeral_rad = 0.0;
};

struct Trajectory {
    std::vector<Waypoint> waypoints;
    TrajInterpolation interpolation = TrajInterpolation::JointLinear;
    double rate_hz = 1000.0;

    void validate() const;  // >= 2 waypoints, 100 <= rate <= 10000, dwell >= 0
    double duration_s() const;
    /// Target angles (flexion, abduction, humeral) at time t.
    std::array<double, 3> target_at(double t) const;
};

/// Compliance coupling between the virtual manipulator's grip and the arm.
struct GraspModel {
    double grip_radius_m = 0.25;                     // grip point from joint center
    double linear_compliance_N_per_m = 800.0;        // swing axes
    double rotational_compliance_Ncm_per_rad = 500;  // humeral axis
    double slip_threshold_N = 40.0;

    void validate() const;
};

struct SimOptions {
    bool passive = false;           // motors off: no rendered torque
    double sensor_noise_sigma = 0;  // additive gaussian on the sensed wrench
    std::uint64_t seed = 0;
    double belt_ratio = 3.33;  // joint torque = belt_ratio * motor torque
    bool apply_belt_ratio = true;
};

struct LogRow {
    double t = 0.0;
    JointPose pose;              // state at the tick, omega as used this tick
    TorqueCommand torque;        // rendered (zero when passive)
    std::array<double, 3> sensed_force_N{0, 0, 0};
    std::array<double, 3> sensed_torque_Ncm{0, 0, 0};
    Regime regime = Regime::FreeRom;
    bool slip = false;
};

struct RunSummary {
    double peak_joint_torque_Ncm = 0.0;
    double peak_motor_torque_Ncm = 0.0;
    double manipulator_work_Ncm_rad = 0.0;
    double damping_dissipation_Ncm_rad = 0.0;
    int slip_count = 0;
    double first_tendon_contact_abduction_deg = -1.0;  // -1 when never
};

struct TrajectoryLog {
    double rate_hz = 0.0;
    std::vector<LogRow> rows;
    RunSummary summary;
};

struct SimState {
    JointPose pose;
    long tick = 0;
    // physical (noise-free) energy bookkeeping
    double manipulator_work_Ncm_rad = 0.0;
    double damping_dissipation_Ncm_rad = 0.0;
};

/// One control tick: compliance pulls the pose toward the target, the limit
/// check and torque law run on the current pose, the first-order (velocity
/// resolved) plant integrates. Returns the log row for this tick.
LogRow step(SimState& state, const SubjectProfile& profile, const ReachCone& cone,
            const GraspModel& grasp, const std::array<double, 3>& target, double dt,
            const SimOptions& options, const std::array<double, 6>& wrench_noise = {});

/// Runs the whole trajectory at the fixed rate. Deterministic for a given
/// seed; throws on non-finite state.
TrajectoryLog run_trajectory(const SubjectProfile& profile, const ConeFamily& family,
                             const Trajectory& traj, const GraspModel& grasp,
                             const SimOptions& options = {});

/// Re-renders every logged pose through the limit and torque modules and
/// checks the logged torques bit-exactly.
bool replay_matches(const TrajectoryLog& log, const SubjectProfile& profile,
                    const ConeFamily& family, const SimOptions& options = {});

} // namespace shoulder

#endif
