#ifndef SHOULDER_LIMITS_HPP
#define SHOULDER_LIMITS_HPP

#include "shoulder/anatomy.hpp"
#include "shoulder/geom.hpp"

namespace shoulder {

/// Outcome of the wedge containment test for one arm direction.
struct InclusionResult {
    bool inside = false;
    int wedge_index = 0;
    double signed_distance_d = 0.0;  // dot-product units, >= 0 means inside
    Vec3 arm_vector_L;
};

/// Angle-axis correction rotating an exterior arm vector back onto the cone
/// surface, with the rotation vector decomposed onto the torso-frame motor
/// axes (flexion, abduction, humeral).
struct AngularError {
    double rotation_angle_phi = 0.0;          // radians, >= 0
    Vec3 rotation_axis_a{0.0, 0.0, 1.0};      // unit; placeholder when phi == 0
    double flexion_error_rad = 0.0;
    double abduction_error_rad = 0.0;
    double humeral_error_rad = 0.0;
};

enum class WedgeSearch { LinearScan, BinaryAzimuth };

/// Locates the wedge whose internal planes sandwich L (half-open: ties on
/// S_i go to wedge i) and reports the signed distance B_i . L.
/// Throws NoWedgeFound when L is antipodal-degenerate with the visible point.
InclusionResult point_in_cone(const ReachCone& cone, const Vec3& L,
                              WedgeSearch search = WedgeSearch::LinearScan);

/// Shortest per-wedge rotation from an exterior L onto the cone surface:
/// projects L onto the wedge's edge plane, then phi = acos(L . L_B),
/// a = normalize(L x L_B). Inside results return a zero error.
AngularError closest_surface_rotation(const ReachCone& cone, const InclusionResult& result);

} // namespace shoulder

#endif
