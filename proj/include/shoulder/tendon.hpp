#ifndef SHOULDER_TENDON_HPP
#define SHOULDER_TENDON_HPP

#include <utility>
#include <vector>

namespace shoulder {

/// Torsional spring law rendered past the free range of motion. The linear
/// form is a single constant; the quadratic form evaluates
/// K_p(theta_e) = a2*theta_e^2 + a1*theta_e + a0 (theta_e in degrees,
/// K_p in Ncm/deg) and is clamped to [clamp_min, clamp_max].
struct TendonModel {
    enum class Kind { Linear, Quadratic };

    Kind kind = Kind::Quadratic;
    double k_linear_Ncm_per_deg = 0.072;
    double quad_a2 = -0.002;
    double quad_a1 = 0.081;
    double quad_a0 = -0.093;
    double clamp_min_Ncm_per_deg = 0.0;
    double clamp_max_Ncm_per_deg = 0.243;

    static TendonModel linear(double k = 0.072);
    static TendonModel quadratic();
};

/// Clamped stiffness K_p (Ncm/deg) at a stretch angle theta_e (degrees >= 0).
double tendon_stiffness_Ncm_per_deg(const TendonModel& model, double theta_e_deg);

/// Spring torque magnitude (Ncm) at a stretch angle: clamp(K_p) * theta_e.
double tendon_torque_Ncm(const TendonModel& model, double theta_e_deg);

/// Reference torque curve sampled at 0.1 deg steps over [0, theta_range_deg].
std::vector<std::pair<double, double>> ideal_tendon_curve(const TendonModel& model,
                                                          double theta_range_deg);

/// Root-mean-square difference between two equally sampled curves.
double curve_rmse(const std::vector<std::pair<double, double>>& a,
                  const std::vector<std::pair<double, double>>& b);

} // namespace shoulder

#endif
