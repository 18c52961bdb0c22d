#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace shoulder::oracles {

namespace {

void quadrant_of(double flex, double ext, double abd, double add, double az_deg, double& a,
                 double& b, double& frac) {
    double az = std::fmod(az_deg, 360.0);
    if (az < 0.0) az += 360.0;
    if (az < 90.0) { a = flex; b = abd; frac = az / 90.0; }
    else if (az < 180.0) { a = abd; b = ext; frac = (az - 90.0) / 90.0; }
    else if (az < 270.0) { a = ext; b = add; frac = (az - 180.0) / 90.0; }
    else { a = add; b = flex; frac = (az - 270.0) / 90.0; }
}

double angle(const Vec3& u, const Vec3& v) {
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

} // namespace

double linear_polar_deg(double flex, double ext, double abd, double add, double az_deg) {
    double a, b, frac;
    quadrant_of(flex, ext, abd, add, az_deg, a, b, frac);
    return a + (b - a) * frac;
}

double ellipse_polar_deg(double flex, double ext, double abd, double add, double az_deg) {
    double a, b, frac;
    quadrant_of(flex, ext, abd, add, az_deg, a, b, frac);
    double t = frac * kPi / 2.0;
    double den = std::hypot(b * std::cos(t), a * std::sin(t));
    if (den < 1e-12) return 0.0;
    return a * b / den;
}

Vec3 exterior_anchor(const GoniometerLimits& limits) {
    double az = (limits.adduction_max_deg <= limits.extension_max_deg) ? 225.0 : 135.0;
    double polar = (linear_polar_deg(limits.flexion_max_deg, limits.extension_max_deg,
                                     limits.abduction_max_deg, limits.adduction_max_deg, az) +
                    180.0) /
                   2.0;
    return direction_az_polar(deg2rad(az), deg2rad(polar));
}

bool inside_by_crossing(std::span<const Vec3> boundary, const Vec3& anchor_outside,
                        const Vec3& L) {
    const Vec3& R = anchor_outside;
    Vec3 n_rl = cross(R, L);
    double n = norm(n_rl);
    if (n < 1e-12) return false;  // degenerate query; callers avoid it
    n_rl = n_rl * (1.0 / n);

    const size_t count = boundary.size();
    int crossings = 0;
    double arc_rl = angle(R, L);
    for (size_t i = 0; i < count; ++i) {
        const Vec3& a = boundary[i];
        const Vec3& b = boundary[(i + 1) % count];
        double sa = dot(n_rl, a), sb = dot(n_rl, b);
        if ((sa > 0.0) == (sb > 0.0)) continue;
        Vec3 n_ab = normalized(cross(a, b));
        Vec3 t = cross(n_rl, n_ab);
        double tn = norm(t);
        if (tn < 1e-12) continue;
        t = t * (1.0 / tn);
        double arc_ab = angle(a, b);
        for (const Vec3& q : {t, -t}) {
            if (std::fabs(angle(R, q) + angle(q, L) - arc_rl) < 1e-9 &&
                std::fabs(angle(a, q) + angle(q, b) - arc_ab) < 1e-9) {
                ++crossings;
                break;
            }
        }
    }
    return (crossings % 2) == 1;
}

double boundary_distance_rad(std::span<const Vec3> boundary, const Vec3& L, int subdiv,
                             int* nearest_edge) {
    double best = kPi;
    const size_t count = boundary.size();
    for (size_t i = 0; i < count; ++i) {
        const Vec3& a = boundary[i];
        const Vec3& b = boundary[(i + 1) % count];
        for (int k = 0; k <= subdiv; ++k) {
            Vec3 q = slerp(a, b, static_cast<double>(k) / subdiv);
            double d = angle(q, L);
            if (d < best) {
                best = d;
                if (nearest_edge) *nearest_edge = static_cast<int>(i);
            }
        }
    }
    return best;
}

double boundary_distance_lower_bound_rad(std::span<const Vec3> boundary, const Vec3& L) {
    double best = kPi;
    const size_t count = boundary.size();
    for (size_t i = 0; i < count; ++i) {
        Vec3 bn = normalized(cross(boundary[i], boundary[(i + 1) % count]));
        best = std::min(best, std::asin(std::min(1.0, std::fabs(dot(bn, L)))));
    }
    return best;
}

double continuous_coverage(const GoniometerLimits& limits, InterpolationScheme scheme,
                           int samples) {
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
        double az = 360.0 * (i + 0.5) / samples;
        double polar = (scheme == InterpolationScheme::Linear)
                           ? linear_polar_deg(limits.flexion_max_deg, limits.extension_max_deg,
                                              limits.abduction_max_deg,
                                              limits.adduction_max_deg, az)
                           : ellipse_polar_deg(limits.flexion_max_deg,
                                               limits.extension_max_deg,
                                               limits.abduction_max_deg,
                                               limits.adduction_max_deg, az);
        acc += 1.0 - std::cos(deg2rad(polar));
    }
    return acc / (2.0 * samples);
}

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        double n = norm(v);
        if (n > 1e-6) return v * (1.0 / n);
    }
}

} // namespace shoulder::oracles
