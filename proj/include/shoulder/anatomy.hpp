#ifndef SHOULDER_ANATOMY_HPP
#define SHOULDER_ANATOMY_HPP

#include <span>
#include <string>
#include <vector>

#include "shoulder/geom.hpp"
#include "shoulder/tendon.hpp"

namespace shoulder {

// Torso frame, shared by every module: X points forward, Y to the abduction
// side, Z up. The rest direction (arm hanging at the side) is -Z. Positive
// flexion swings the arm toward +X (rotation about -Y), positive abduction
// toward +Y (rotation about +X). Humeral rotation is axial, about the arm.
inline Vec3 rest_direction() { return {0.0, 0.0, -1.0}; }
inline Vec3 flexion_axis() { return {0.0, -1.0, 0.0}; }
inline Vec3 abduction_axis() { return {1.0, 0.0, 0.0}; }
inline Vec3 humeral_axis_at_rest() { return {0.0, 0.0, -1.0}; }

/// Unit arm direction for a flexion/abduction pair (radians), via the
/// device's flexion-then-abduction gimbal applied to the rest direction.
Vec3 arm_direction(double flexion_rad, double abduction_rad);

/// Sphere chart used for cone boundaries: azimuth 0 = flexion direction,
/// 90 deg = abduction, 180 = extension, 270 = adduction; polar angle is
/// measured from the rest direction.
Vec3 direction_az_polar(double azimuth_rad, double polar_rad);

/// Four clinical range-of-motion maxima, degrees from neutral.
struct GoniometerLimits {
    double flexion_max_deg = 0.0;
    double extension_max_deg = 0.0;
    double abduction_max_deg = 0.0;
    double adduction_max_deg = 0.0;

    /// Throws InvalidLimits unless every angle is finite and in (0, 180],
    /// adduction alone may be 0.
    void validate() const;
};

/// How the four principal maxima are widened into a full boundary curve.
/// Linear interpolates the polar angle in azimuth inside each quadrant;
/// EllipseQuadrant uses the polar form of the quadrant ellipse.
enum class InterpolationScheme { Linear, EllipseQuadrant };

/// Boundary polar angle (degrees) at a torso azimuth (degrees) for a limit
/// set under a scheme. Closed form; the cone vertices sample it.
double boundary_polar_deg(const GoniometerLimits& limits, double azimuth_deg,
                          InterpolationScheme scheme);

/// Spherical polygon of joint-limit directions plus the precomputed wedge
/// data used by the inclusion test.
struct ReachCone {
    std::vector<Vec3> boundary_points;   // ordered so edge normals face V
    Vec3 visible_point;                  // interior reference point V
    std::vector<Vec3> edge_normals_B;    // B_i = normalize(P_i x P_{i+1})
    std::vector<Vec3> wedge_normals_S;   // S_i = normalize(V x P_i)
    InterpolationScheme scheme = InterpolationScheme::Linear;

    // tangent basis at V and per-vertex azimuths (strictly increasing,
    // vertex_azimuth[0] == 0) backing the optional binary wedge search
    Vec3 frame_x, frame_y;
    std::vector<double> vertex_azimuth;

    int size() const { return static_cast<int>(boundary_points.size()); }
};

/// Interior reference point for a closed boundary loop: the point maximizing
/// the worst-case clearance min_i B_i . V over the edge great circles.
/// Throws DegenerateCone when no strictly interior point exists. Hint points
/// (e.g. the visible point of a nearby cone) short-circuit the global search.
Vec3 choose_visible_point(std::span<const Vec3> boundary);
Vec3 choose_visible_point(std::span<const Vec3> boundary, std::span<const Vec3> hints);

/// Builds the wedge tables for an already-ordered boundary and validates
/// every cone invariant. Used by the builder, the coupling interpolator and
/// the artifact loader.
ReachCone assemble_reach_cone(std::vector<Vec3> boundary, InterpolationScheme scheme,
                              std::span<const Vec3> visible_hints = {});

/// Same, but with a caller-supplied visible point (validated, not chosen).
ReachCone assemble_with_visible(std::vector<Vec3> boundary, const Vec3& visible,
                                InterpolationScheme scheme);

/// Interpolates the four goniometer maxima into an n_points boundary
/// (n_points >= 4, divisible by 4) and assembles the cone.
ReachCone build_reach_cone(const GoniometerLimits& limits, int n_points = 64,
                           InterpolationScheme scheme = InterpolationScheme::Linear);

/// One keyed row of the humeral coupling table.
struct CouplingRow {
    double gamma_deg = 0.0;
    GoniometerLimits limits;
};

/// Anatomical and haptic parameters for one simulated person (or device).
struct SubjectProfile {
    std::string name = "unnamed";
    GoniometerLimits limits;
    double humeral_medial_deg = -63.0;  // signed: medial (internal) rotation
    double humeral_lateral_deg = 92.0;  // lateral (external) rotation
    double upper_arm_length_m = 0.30;
    double moment_arm_m = 0.0154;
    double damping_Nms_per_rad = 0.35;
    double torque_ceiling_Ncm = 5.0;
    TendonModel spring;
    double humeral_spring_scale = 1.0;  // per-axis override of the swing model
    std::vector<CouplingRow> coupling;  // empty -> constant-limit family

    void validate() const;  // throws RangeError on invariant violations
};

} // namespace shoulder

#endif
