#include "shoulder/limits.hpp"

#include <algorithm>
#include <cmath>

#include "shoulder/errors.hpp"

namespace shoulder {

namespace {

inline bool sandwich(const ReachCone& cone, const Vec3& L, int i) {
    const int n = cone.size();
    return dot(cone.wedge_normals_S[i], L) >= 0.0 &&
           dot(cone.wedge_normals_S[(i + 1) % n], L) < 0.0;
}

int find_wedge_linear(const ReachCone& cone, const Vec3& L) {
    const int n = cone.size();
    for (int i = 0; i < n; ++i)
        if (sandwich(cone, L, i)) return i;
    return -1;
}

int find_wedge_binary(const ReachCone& cone, const Vec3& L) {
    const Vec3& V = cone.visible_point;
    Vec3 t = L - V * dot(L, V);
    double tn = norm(t);
    if (tn < 1e-15) return -1;
    double az = std::atan2(dot(L, cone.frame_y), dot(L, cone.frame_x));
    if (az < 0.0) az += 2.0 * kPi;
    auto it = std::upper_bound(cone.vertex_azimuth.begin(), cone.vertex_azimuth.end(), az);
    int cand = static_cast<int>(it - cone.vertex_azimuth.begin()) - 1;
    const int n = cone.size();
    // settle ties with the exact half-open predicate so results are identical
    // to the linear scan
    for (int off = 0; off <= 2; ++off)
        for (int sgn : {1, -1}) {
            int i = ((cand + sgn * off) % n + n) % n;
            if (sandwich(cone, L, i)) return i;
            if (off == 0) break;
        }
    return find_wedge_linear(cone, L);
}

} // namespace

InclusionResult point_in_cone(const ReachCone& cone, const Vec3& L, WedgeSearch search) {
    const Vec3& V = cone.visible_point;

    InclusionResult res;
    res.arm_vector_L = L;

    // exactly parallel directions have no azimuth around V. +V is interior by
    // construction; -V lies beyond the boundary on every azimuthal ray (the
    // cone is star-shaped about V), so it is outside in every wedge.
    if (norm(L - V) < 1e-9) {
        res.inside = true;
        res.wedge_index = 0;
        res.signed_distance_d = dot(cone.edge_normals_B[0], L);
        return res;
    }
    if (norm(L + V) < 1e-9) {
        res.inside = false;
        res.wedge_index = 0;
        res.signed_distance_d = dot(cone.edge_normals_B[0], L);
        return res;
    }

    int w = (search == WedgeSearch::LinearScan) ? find_wedge_linear(cone, L)
                                                : find_wedge_binary(cone, L);
    if (w < 0)
        throw NoWedgeFound("no wedge sandwiches the arm vector");

    res.wedge_index = w;
    res.signed_distance_d = dot(cone.edge_normals_B[w], L);
    res.inside = res.signed_distance_d >= 0.0;
    return res;
}

AngularError closest_surface_rotation(const ReachCone& cone, const InclusionResult& result) {
    AngularError err;
    if (result.inside) return err;

    const Vec3& L = result.arm_vector_L;
    const Vec3& B = cone.edge_normals_B[result.wedge_index];

    Vec3 proj = L - B * dot(L, B);
    double pn = norm(proj);
    Vec3 target;
    if (pn > 1e-9) {
        target = proj * (1.0 / pn);
    } else {
        // L parallel to the edge normal: projection degenerates, rotate
        // toward the nearer wedge vertex instead
        const int n = cone.size();
        const Vec3& p0 = cone.boundary_points[result.wedge_index];
        const Vec3& p1 = cone.boundary_points[(result.wedge_index + 1) % n];
        target = (dot(L, p0) >= dot(L, p1)) ? p0 : p1;
    }

    double phi = std::atan2(norm(cross(L, target)), dot(L, target));
    if (phi < 1e-15) return err;

    Vec3 axis = normalized(cross(L, target));
    err.rotation_angle_phi = phi;
    err.rotation_axis_a = axis;
    Vec3 e = axis * phi;
    err.flexion_error_rad = dot(e, flexion_axis());
    err.abduction_error_rad = dot(e, abduction_axis());
    err.humeral_error_rad = dot(e, humeral_axis_at_rest());
    return err;
}

} // namespace shoulder
