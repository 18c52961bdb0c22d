#include "shoulder/haptics.hpp"

#include <algorithm>
#include <cmath>

#include "shoulder/errors.hpp"

namespace shoulder {

TendonModel TendonModel::linear(double k) {
    TendonModel m;
    m.kind = Kind::Linear;
    m.k_linear_Ncm_per_deg = k;
    return m;
}

TendonModel TendonModel::quadratic() { return TendonModel{}; }

double tendon_stiffness_Ncm_per_deg(const TendonModel& model, double theta_e_deg) {
    double k;
    if (model.kind == TendonModel::Kind::Linear) {
        k = model.k_linear_Ncm_per_deg;
    } else {
        k = model.quad_a2 * theta_e_deg * theta_e_deg + model.quad_a1 * theta_e_deg +
            model.quad_a0;
    }
    return std::clamp(k, model.clamp_min_Ncm_per_deg, model.clamp_max_Ncm_per_deg);
}

double tendon_torque_Ncm(const TendonModel& model, double theta_e_deg) {
    return tendon_stiffness_Ncm_per_deg(model, theta_e_deg) * theta_e_deg;
}

std::vector<std::pair<double, double>> ideal_tendon_curve(const TendonModel& model,
                                                          double theta_range_deg) {
    if (!(theta_range_deg > 0.0)) throw RangeError("theta_range must be > 0");
    int steps = static_cast<int>(std::floor(theta_range_deg / 0.1 + 1e-9));
    std::vector<std::pair<double, double>> out;
    out.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        double th = 0.1 * i;
        out.emplace_back(th, tendon_torque_Ncm(model, th));
    }
    return out;
}

double curve_rmse(const std::vector<std::pair<double, double>>& a,
                  const std::vector<std::pair<double, double>>& b) {
    size_t n = std::min(a.size(), b.size());
    if (n == 0) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double d = a[i].second - b[i].second;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(n));
}

std::array<double, 3> spring_torque_Ncm(const AngularError& error, const TendonModel& model,
                                        double humeral_spring_scale) {
    if (error.rotation_angle_phi <= 0.0) return {0.0, 0.0, 0.0};
    double phi_deg = rad2deg(error.rotation_angle_phi);
    double k = tendon_stiffness_Ncm_per_deg(model, phi_deg);
    return {k * rad2deg(error.flexion_error_rad), k * rad2deg(error.abduction_error_rad),
            humeral_spring_scale * k * rad2deg(error.humeral_error_rad)};
}

TorqueCommand render_torque(const JointPose& pose, const AngularError& error,
                            const TendonModel& model, double damping_Nms_per_rad,
                            double ceiling_Ncm, double humeral_spring_scale) {
    TorqueCommand cmd;
    cmd.timestamp = pose.timestamp;
    double b_Ncm = damping_Nms_per_rad * 100.0;  // N*m -> N*cm
    std::array<double, 3> spring{0.0, 0.0, 0.0};
    if (error.rotation_angle_phi > 0.0) {
        cmd.regime = Regime::TendonStretch;
        spring = spring_torque_Ncm(error, model, humeral_spring_scale);
    }
    for (int i = 0; i < 3; ++i) {
        double t = spring[i] - b_Ncm * pose.omega[i];
        cmd.tau_Ncm[i] = std::clamp(t, -ceiling_Ncm, ceiling_Ncm);
    }
    return cmd;
}

RotationalSample tensile_to_rotational(double displacement_cm, double load_N,
                                       double moment_arm_m) {
    if (!(moment_arm_m > 0.0)) throw RangeError("moment_arm must be > 0");
    if (displacement_cm < 0.0) throw RangeError("displacement must be >= 0");
    double theta_rad = (displacement_cm / 100.0) / moment_arm_m;
    return {rad2deg(theta_rad), load_N * moment_arm_m * 100.0};
}

} // namespace shoulder
