#include "shoulder/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "shoulder/errors.hpp"

namespace shoulder {

void Trajectory::validate() const {
    if (waypoints.size() < 2) throw RangeError("trajectory needs at least 2 waypoints");
    if (rate_hz < 100.0 || rate_hz > 10000.0)
        throw RangeError("rate must be within [100, 10000] Hz");
    for (const Waypoint& w : waypoints) {
        if (w.dwell_s < 0.0 || w.travel_s < 0.0)
            throw RangeError("waypoint times must be >= 0");
        if (!std::isfinite(w.flexion_rad) || !std::isfinite(w.abduction_rad) ||
            !std::isfinite(w.humeral_rad))
            throw RangeError("waypoint angles must be finite");
    }
}

double Trajectory::duration_s() const {
    double d = waypoints.front().dwell_s;
    for (size_t i = 1; i < waypoints.size(); ++i)
        d += waypoints[i].travel_s + waypoints[i].dwell_s;
    return d;
}

namespace {

std::array<double, 3> angles_of(const Waypoint& w) {
    return {w.flexion_rad, w.abduction_rad, w.humeral_rad};
}

std::array<double, 3> blend(const Waypoint& a, const Waypoint& b, double t,
                            TrajInterpolation mode) {
    if (mode == TrajInterpolation::JointLinear) {
        return {a.flexion_rad + (b.flexion_rad - a.flexion_rad) * t,
                a.abduction_rad + (b.abduction_rad - a.abduction_rad) * t,
                a.humeral_rad + (b.humeral_rad - a.humeral_rad) * t};
    }
    // cartesian arc: slerp the arm direction, lerp the axial angle
    Vec3 da = arm_direction(a.flexion_rad, a.abduction_rad);
    Vec3 db = arm_direction(b.flexion_rad, b.abduction_rad);
    Vec3 d = normalized(slerp(da, db, t));
    double abd = std::asin(std::clamp(d.y, -1.0, 1.0));
    double flex = std::atan2(d.x, -d.z);
    return {flex, abd, a.humeral_rad + (b.humeral_rad - a.humeral_rad) * t};
}

} // namespace

std::array<double, 3> Trajectory::target_at(double t) const {
    double seg_start = 0.0;
    if (t <= waypoints.front().dwell_s) return angles_of(waypoints.front());
    seg_start = waypoints.front().dwell_s;
    for (size_t i = 1; i < waypoints.size(); ++i) {
        const Waypoint& prev = waypoints[i - 1];
        const Waypoint& cur = waypoints[i];
        if (cur.travel_s > 0.0 && t <= seg_start + cur.travel_s)
            return blend(prev, cur, (t - seg_start) / cur.travel_s, interpolation);
        seg_start += cur.travel_s;
        if (t <= seg_start + cur.dwell_s) return angles_of(cur);
        seg_start += cur.dwell_s;
    }
    return angles_of(waypoints.back());
}

void GraspModel::validate() const {
    if (!(grip_radius_m > 0.0)) throw RangeError("grip radius must be > 0");
    if (!(linear_compliance_N_per_m > 0.0) || !(rotational_compliance_Ncm_per_rad > 0.0))
        throw RangeError("grasp compliance must be > 0");
    if (!(slip_threshold_N > 0.0)) throw RangeError("slip threshold must be > 0");
}

LogRow step(SimState& state, const SubjectProfile& profile, const ReachCone& cone,
            const GraspModel& grasp, const std::array<double, 3>& target, double dt,
            const SimOptions& options, const std::array<double, 6>& wrench_noise) {
    JointPose& pose = state.pose;
    const double b_Ncm = profile.damping_Nms_per_rad * 100.0;

    Vec3 L = arm_direction(pose.theta_flexion, pose.phi_abduction);
    InclusionResult inc = point_in_cone(cone, L);
    AngularError err = closest_surface_rotation(cone, inc);

    std::array<double, 3> spring{0.0, 0.0, 0.0};
    if (!options.passive)
        spring = spring_torque_Ncm(err, profile.spring, profile.humeral_spring_scale);

    // manipulator compliance, joint space
    const double k_swing = grasp.linear_compliance_N_per_m * grasp.grip_radius_m *
                           grasp.grip_radius_m * 100.0;  // Ncm/rad
    std::array<double, 3> q{pose.theta_flexion, pose.phi_abduction, pose.gamma_humeral};
    std::array<double, 3> tau_g{k_swing * (target[0] - q[0]), k_swing * (target[1] - q[1]),
                                grasp.rotational_compliance_Ncm_per_rad * (target[2] - q[2])};

    bool slip = false;
    double grip_force_N =
        std::hypot(tau_g[0], tau_g[1]) / (grasp.grip_radius_m * 100.0);
    if (grip_force_N > grasp.slip_threshold_N) {
        slip = true;
        tau_g = {0.0, 0.0, 0.0};
    }

    // first-order plant: damping balances grasp + spring each tick
    std::array<double, 3> qdot;
    for (int i = 0; i < 3; ++i) qdot[i] = (tau_g[i] + spring[i]) / b_Ncm;
    pose.omega = qdot;

    LogRow row;
    row.t = pose.timestamp;
    row.pose = pose;
    row.torque = render_torque(pose, err, profile.spring, profile.damping_Nms_per_rad,
                               profile.torque_ceiling_Ncm, profile.humeral_spring_scale);
    row.regime = row.torque.regime;
    if (options.passive) row.torque.tau_Ncm = {0.0, 0.0, 0.0};
    row.slip = slip;
    for (int i = 0; i < 3; ++i) {
        row.sensed_torque_Ncm[i] = tau_g[i] + wrench_noise[i];
        row.sensed_force_N[i] =
            tau_g[i] / (grasp.grip_radius_m * 100.0) + wrench_noise[3 + i];
        state.manipulator_work_Ncm_rad += tau_g[i] * qdot[i] * dt;
        state.damping_dissipation_Ncm_rad += b_Ncm * qdot[i] * qdot[i] * dt;
    }

    pose.theta_flexion += qdot[0] * dt;
    pose.phi_abduction += qdot[1] * dt;
    pose.gamma_humeral += qdot[2] * dt;
    state.tick += 1;
    return row;
}

TrajectoryLog run_trajectory(const SubjectProfile& profile, const ConeFamily& family,
                             const Trajectory& traj, const GraspModel& grasp,
                             const SimOptions& options) {
    profile.validate();
    traj.validate();
    grasp.validate();
    if (!(profile.damping_Nms_per_rad > 0.0))
        throw RangeError("the velocity-resolved plant needs damping > 0");

    TrajectoryLog log;
    log.rate_hz = traj.rate_hz;
    const double dt = 1.0 / traj.rate_hz;
    const double duration = traj.duration_s();
    const long n_ticks = static_cast<long>(std::floor(duration * traj.rate_hz)) + 1;
    log.rows.reserve(n_ticks);

    SimState state;
    const Waypoint& w0 = traj.waypoints.front();
    state.pose.theta_flexion = w0.flexion_rad;
    state.pose.phi_abduction = w0.abduction_rad;
    state.pose.gamma_humeral = w0.humeral_rad;

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> gauss(0.0, options.sensor_noise_sigma);

    double cached_gamma = std::numeric_limits<double>::quiet_NaN();
    ReachCone cone;

    RunSummary& sum = log.summary;
    for (long i = 0; i < n_ticks; ++i) {
        double t = static_cast<double>(i) / traj.rate_hz;
        state.pose.timestamp = t;
        double gamma_deg = rad2deg(state.pose.gamma_humeral);
        if (!(gamma_deg == cached_gamma)) {
            cone = cone_at(family, gamma_deg);
            cached_gamma = gamma_deg;
        }
        std::array<double, 6> noise{};
        if (options.sensor_noise_sigma > 0.0)
            for (double& v : noise) v = gauss(rng);
        LogRow row = step(state, profile, cone, grasp, traj.target_at(t), dt, options, noise);
        if (!std::isfinite(state.pose.theta_flexion) ||
            !std::isfinite(state.pose.phi_abduction) ||
            !std::isfinite(state.pose.gamma_humeral))
            throw Error("simulation state became non-finite at t=" + std::to_string(t));

        for (int k = 0; k < 3; ++k)
            sum.peak_joint_torque_Ncm =
                std::max(sum.peak_joint_torque_Ncm, std::fabs(row.torque.tau_Ncm[k]));
        if (row.slip) sum.slip_count += 1;
        if (row.regime == Regime::TendonStretch && sum.first_tendon_contact_abduction_deg < 0.0)
            sum.first_tendon_contact_abduction_deg = rad2deg(row.pose.phi_abduction);
        log.rows.push_back(row);
    }
    sum.manipulator_work_Ncm_rad = state.manipulator_work_Ncm_rad;
    sum.damping_dissipation_Ncm_rad = state.damping_dissipation_Ncm_rad;
    sum.peak_motor_torque_Ncm = options.apply_belt_ratio
                                    ? sum.peak_joint_torque_Ncm / options.belt_ratio
                                    : sum.peak_joint_torque_Ncm;
    return log;
}

bool replay_matches(const TrajectoryLog& log, const SubjectProfile& profile,
                    const ConeFamily& family, const SimOptions& options) {
    for (const LogRow& row : log.rows) {
        ReachCone cone = cone_at(family, rad2deg(row.pose.gamma_humeral));
        Vec3 L = arm_direction(row.pose.theta_flexion, row.pose.phi_abduction);
        InclusionResult inc = point_in_cone(cone, L);
        AngularError err = closest_surface_rotation(cone, inc);
        TorqueCommand cmd = render_torque(row.pose, err, profile.spring,
                                          profile.damping_Nms_per_rad,
                                          profile.torque_ceiling_Ncm,
                                          profile.humeral_spring_scale);
        if (cmd.regime != row.regime) return false;
        if (options.passive) {
            for (double tau : row.torque.tau_Ncm)
                if (tau != 0.0) return false;
        } else {
            for (int k = 0; k < 3; ++k)
                if (cmd.tau_Ncm[k] != row.torque.tau_Ncm[k]) return false;
        }
    }
    return true;
}

} // namespace shoulder
