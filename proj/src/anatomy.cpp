#include "shoulder/anatomy.hpp"

#include <algorithm>
#include <cmath>

#include "shoulder/errors.hpp"

namespace shoulder {

Vec3 arm_direction(double flexion_rad, double abduction_rad) {
    // R_y(-flexion) * R_x(abduction) applied to the rest direction (0,0,-1)
    double sf = std::sin(flexion_rad), cf = std::cos(flexion_rad);
    double sa = std::sin(abduction_rad), ca = std::cos(abduction_rad);
    return {sf * ca, sa, -cf * ca};
}

Vec3 direction_az_polar(double azimuth_rad, double polar_rad) {
    double sp = std::sin(polar_rad), cp = std::cos(polar_rad);
    return {sp * std::cos(azimuth_rad), sp * std::sin(azimuth_rad), -cp};
}

void GoniometerLimits::validate() const {
    auto check = [](double v, const char* name, bool zero_ok) {
        if (!std::isfinite(v))
            throw InvalidLimits(std::string(name) + " is not finite");
        if (v > 180.0 || v < 0.0 || (v == 0.0 && !zero_ok))
            throw InvalidLimits(std::string(name) + " out of range: " + std::to_string(v));
    };
    check(flexion_max_deg, "flexion_max", false);
    check(extension_max_deg, "extension_max", false);
    check(abduction_max_deg, "abduction_max", false);
    check(adduction_max_deg, "adduction_max", true);
}

double boundary_polar_deg(const GoniometerLimits& limits, double azimuth_deg,
                          InterpolationScheme scheme) {
    double az = std::fmod(azimuth_deg, 360.0);
    if (az < 0.0) az += 360.0;
    // quadrant endpoints: flexion @ 0, abduction @ 90, extension @ 180, adduction @ 270
    double a, b, frac;
    if (az < 90.0) {
        a = limits.flexion_max_deg; b = limits.abduction_max_deg; frac = az / 90.0;
    } else if (az < 180.0) {
        a = limits.abduction_max_deg; b = limits.extension_max_deg; frac = (az - 90.0) / 90.0;
    } else if (az < 270.0) {
        a = limits.extension_max_deg; b = limits.adduction_max_deg; frac = (az - 180.0) / 90.0;
    } else {
        a = limits.adduction_max_deg; b = limits.flexion_max_deg; frac = (az - 270.0) / 90.0;
    }
    if (scheme == InterpolationScheme::Linear) return a + (b - a) * frac;
    // polar form of the quadrant ellipse with semi-axes a (quadrant start) and b (end)
    double t = frac * kPi / 2.0;
    double den = std::hypot(b * std::cos(t), a * std::sin(t));
    if (den < 1e-12) return 0.0;
    return a * b / den;
}

namespace {

// Deterministic axis-aligned hill climb of min_i B_i . x with a halving
// step schedule. Leaves the start point untouched when it is already optimal.
Vec3 descend(const std::vector<Vec3>& B, Vec3 start, double& margin_io) {
    auto score = [&B](const Vec3& x) {
        double worst = 2.0;
        for (const Vec3& b : B) worst = std::min(worst, dot(b, x));
        return worst;
    };
    Vec3 best = start;
    double best_v = margin_io;
    double step = 0.05;
    while (step > 1e-10) {
        bool improved = false;
        for (int k = 0; k < 3; ++k) {
            for (double sgn : {1.0, -1.0}) {
                Vec3 y = best;
                (k == 0 ? y.x : k == 1 ? y.y : y.z) += sgn * step;
                y = normalized(y);
                double v = score(y);
                if (v > best_v) { best_v = v; best = y; improved = true; }
            }
        }
        if (!improved) step *= 0.5;
    }
    margin_io = best_v;
    return best;
}

// Global search: coarse 1-degree grid, then the hill climb.
Vec3 kernel_center(const std::vector<Vec3>& B, double& margin_out) {
    auto score = [&B](const Vec3& x) {
        double worst = 2.0;
        for (const Vec3& b : B) worst = std::min(worst, dot(b, x));
        return worst;
    };
    Vec3 best{0, 0, -1};
    double best_v = score(best);
    {
        Vec3 c{0, 0, 1};
        double v = score(c);
        if (v > best_v) { best_v = v; best = c; }
    }
    for (int j = 0; j < 180; ++j) {
        double pol = kPi * (j + 0.5) / 180.0;
        for (int i = 0; i < 360; ++i) {
            Vec3 x = direction_az_polar(2.0 * kPi * i / 360.0, pol);
            double v = score(x);
            if (v > best_v) { best_v = v; best = x; }
        }
    }
    margin_out = best_v;
    return descend(B, best, margin_out);
}

} // namespace

Vec3 choose_visible_point(std::span<const Vec3> boundary) {
    return choose_visible_point(boundary, {});
}

Vec3 choose_visible_point(std::span<const Vec3> boundary, std::span<const Vec3> hints) {
    const int n = static_cast<int>(boundary.size());
    if (n < 3) throw DegenerateCone("boundary has fewer than 3 points");
    std::vector<Vec3> B(n);
    for (int i = 0; i < n; ++i) {
        Vec3 c = cross(boundary[i], boundary[(i + 1) % n]);
        double cn = norm(c);
        if (cn < 1e-12)
            throw DegenerateCone("consecutive boundary points coincide or are antipodal");
        B[i] = c * (1.0 / cn);
    }
    auto score = [&B](const Vec3& x) {
        double worst = 2.0;
        for (const Vec3& b : B) worst = std::min(worst, dot(b, x));
        return worst;
    };

    // cheap candidates: the half-polar resultant (exactly the rest direction
    // for symmetric cones) and any caller hints
    Vec3 half{0, 0, 0};
    for (const Vec3& p : boundary) {
        double pol = std::acos(std::clamp(-p.z, -1.0, 1.0));
        double az = std::atan2(p.y, p.x);
        half += direction_az_polar(az, pol / 2.0);
    }
    if (norm(half) > 1e-6) {
        Vec3 cand = normalized(half);
        if (score(cand) > 0.05) return cand;
    }
    Vec3 best_hint{};
    double best_hint_v = -2.0;
    for (const Vec3& h : hints) {
        double v = score(h);
        if (v > best_hint_v) { best_hint_v = v; best_hint = h; }
    }
    if (best_hint_v > 1e-3) {
        double margin = best_hint_v;
        Vec3 v = descend(B, best_hint, margin);
        if (margin > 1e-9) return v;
    }

    double margin = -2.0;
    Vec3 v = kernel_center(B, margin);
    if (margin <= 1e-9)
        throw DegenerateCone("no interior visible point exists for this boundary");
    return v;
}

ReachCone assemble_reach_cone(std::vector<Vec3> boundary, InterpolationScheme scheme,
                              std::span<const Vec3> visible_hints) {
    Vec3 visible = choose_visible_point(boundary, visible_hints);
    return assemble_with_visible(std::move(boundary), visible, scheme);
}

ReachCone assemble_with_visible(std::vector<Vec3> boundary, const Vec3& visible,
                                InterpolationScheme scheme) {
    const int n = static_cast<int>(boundary.size());
    if (n < 4) throw DegenerateCone("cone needs at least 4 boundary points");

    for (const Vec3& p : boundary)
        if (std::fabs(norm(p) - 1.0) > 1e-9)
            throw DegenerateCone("boundary point is not unit length");
    if (std::fabs(norm(visible) - 1.0) > 1e-9)
        throw DegenerateCone("visible point is not unit length");

    ReachCone cone;
    cone.scheme = scheme;
    cone.visible_point = visible;
    cone.boundary_points = std::move(boundary);
    cone.edge_normals_B.resize(n);
    cone.wedge_normals_S.resize(n);

    const Vec3& V = cone.visible_point;
    for (int i = 0; i < n; ++i) {
        const Vec3& p = cone.boundary_points[i];
        const Vec3& q = cone.boundary_points[(i + 1) % n];
        Vec3 b = cross(p, q);
        double bn = norm(b);
        if (bn < 1e-12) throw DegenerateCone("degenerate edge between boundary points");
        cone.edge_normals_B[i] = b * (1.0 / bn);
        Vec3 s = cross(V, p);
        double sn = norm(s);
        if (sn < 1e-12) throw DegenerateCone("visible point coincides with a boundary point");
        cone.wedge_normals_S[i] = s * (1.0 / sn);
        if (dot(cone.edge_normals_B[i], V) <= 0.0)
            throw DegenerateCone("edge normal does not face the visible point");
    }

    // tangent basis at V; vertex azimuths must wind exactly once, increasing
    cone.frame_x = normalized(cone.boundary_points[0] - V * dot(cone.boundary_points[0], V));
    cone.frame_y = cross(V, cone.frame_x);
    cone.vertex_azimuth.resize(n);
    cone.vertex_azimuth[0] = 0.0;
    double az_prev = 0.0, accumulated = 0.0;
    for (int i = 1; i <= n; ++i) {
        const Vec3& p = cone.boundary_points[i % n];
        double az = std::atan2(dot(p, cone.frame_y), dot(p, cone.frame_x));
        double step = az - az_prev;
        if (step <= 0.0) step += 2.0 * kPi;
        if (step >= kPi)
            throw DegenerateCone("boundary azimuths do not wind monotonically about V");
        accumulated += step;
        az_prev = az;
        if (i < n) cone.vertex_azimuth[i] = accumulated;
    }
    if (std::fabs(accumulated - 2.0 * kPi) > 1e-6)
        throw DegenerateCone("boundary does not wind exactly once about V");

    return cone;
}

ReachCone build_reach_cone(const GoniometerLimits& limits, int n_points,
                           InterpolationScheme scheme) {
    limits.validate();
    if (n_points < 4 || n_points % 4 != 0)
        throw InvalidLimits("n_points must be >= 4 and divisible by 4, got " +
                            std::to_string(n_points));

    // the four principal directions must be pairwise distinct
    const Vec3 principal[4] = {
        direction_az_polar(0.0, deg2rad(limits.flexion_max_deg)),
        direction_az_polar(kPi / 2.0, deg2rad(limits.abduction_max_deg)),
        direction_az_polar(kPi, deg2rad(limits.extension_max_deg)),
        direction_az_polar(3.0 * kPi / 2.0, deg2rad(limits.adduction_max_deg))};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (norm(principal[i] - principal[j]) < 1e-9)
                throw DegenerateCone("two principal boundary points coincide");

    // torso azimuth decreases with index so that edge normals face inward
    std::vector<Vec3> boundary(n_points);
    for (int i = 0; i < n_points; ++i) {
        double az_deg = std::fmod(360.0 - 360.0 * i / n_points, 360.0);
        double polar = boundary_polar_deg(limits, az_deg, scheme);
        boundary[i] = direction_az_polar(deg2rad(az_deg), deg2rad(polar));
    }
    // pin the principal vertices exactly (indices 0, 3n/4, n/2, n/4)
    boundary[0] = principal[0];
    boundary[3 * n_points / 4] = principal[1];
    boundary[n_points / 2] = principal[2];
    boundary[n_points / 4] = principal[3];

    return assemble_reach_cone(std::move(boundary), scheme);
}

void SubjectProfile::validate() const {
    try {
        limits.validate();
    } catch (const InvalidLimits& e) {
        throw RangeError(e.what());
    }
    if (!(upper_arm_length_m > 0.0)) throw RangeError("upper_arm_length must be > 0");
    if (!(moment_arm_m > 0.0)) throw RangeError("moment_arm must be > 0");
    if (!(damping_Nms_per_rad >= 0.0)) throw RangeError("damping must be >= 0");
    if (!(torque_ceiling_Ncm > 0.0)) throw RangeError("torque_ceiling must be > 0");
    if (!std::isfinite(humeral_medial_deg) || !std::isfinite(humeral_lateral_deg) ||
        humeral_medial_deg > humeral_lateral_deg)
        throw RangeError("humeral rotation range must be finite with medial <= lateral");
    if (!(humeral_spring_scale >= 0.0))
        throw RangeError("humeral_spring_scale must be >= 0");
    if (spring.k_linear_Ncm_per_deg < 0.0 || spring.clamp_min_Ncm_per_deg < 0.0 ||
        spring.clamp_max_Ncm_per_deg < spring.clamp_min_Ncm_per_deg)
        throw RangeError("spring constants must satisfy 0 <= clamp_min <= clamp_max, k >= 0");
    for (const CouplingRow& row : coupling) {
        if (!std::isfinite(row.gamma_deg)) throw RangeError("coupling gamma must be finite");
        try {
            row.limits.validate();
        } catch (const InvalidLimits& e) {
            throw RangeError(std::string("coupling row: ") + e.what());
        }
    }
    for (size_t i = 1; i < coupling.size(); ++i)
        if (!(coupling[i - 1].gamma_deg < coupling[i].gamma_deg))
            throw RangeError("coupling gammas must be strictly increasing");
}

} // namespace shoulder
