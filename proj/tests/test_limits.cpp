#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "shoulder/errors.hpp"
#include "shoulder/limits.hpp"

using namespace shoulder;

namespace {

const GoniometerLimits kReference{160.0, 49.0, 174.0, 0.0};

} // namespace

TEST_CASE("visible point and its antipode") {
    ReachCone cone = build_reach_cone({90.0, 90.0, 90.0, 90.0}, 64);
    InclusionResult at_v = point_in_cone(cone, cone.visible_point);
    CHECK(at_v.inside);
    CHECK(at_v.signed_distance_d > 0.0);

    // the antipode of the visible point lies beyond the boundary on every
    // azimuthal ray, so the verdict is outside regardless of wedge
    InclusionResult at_anti = point_in_cone(cone, -cone.visible_point);
    CHECK_FALSE(at_anti.inside);
    CHECK(at_anti.signed_distance_d < 0.0);
}

TEST_CASE("wedge verdicts agree with the crossing-parity oracle") {
    std::mt19937_64 rng(2024);
    for (const GoniometerLimits& lims :
         {kReference, GoniometerLimits{90, 90, 90, 90}, GoniometerLimits{30, 30, 60, 60},
          GoniometerLimits{174, 174, 174, 174}, GoniometerLimits{110, 30, 178, 169.2}}) {
        ReachCone cone = build_reach_cone(lims, 64);
        Vec3 anchor = oracles::exterior_anchor(lims);
        REQUIRE_FALSE(point_in_cone(cone, anchor).inside);
        int tested = 0;
        for (int i = 0; i < 3000; ++i) {
            Vec3 L = oracles::random_unit(rng);
            InclusionResult res = point_in_cone(cone, L);
            if (oracles::boundary_distance_lower_bound_rad(cone.boundary_points, L) <= 1e-5 &&
                oracles::boundary_distance_rad(cone.boundary_points, L, 256) <= 1e-5)
                continue;  // boundary band excluded
            ++tested;
            CHECK(res.inside == oracles::inside_by_crossing(cone.boundary_points, anchor, L));
        }
        CHECK(tested > 2800);
    }
}

TEST_CASE("exactly one wedge satisfies the sandwich condition") {
    std::mt19937_64 rng(77);
    ReachCone cone = build_reach_cone(kReference, 64);
    for (int i = 0; i < 2000; ++i) {
        Vec3 L = oracles::random_unit(rng);
        int hits = 0;
        for (int w = 0; w < cone.size(); ++w) {
            double s0 = dot(cone.wedge_normals_S[w], L);
            double s1 = dot(cone.wedge_normals_S[(w + 1) % cone.size()], L);
            if (s0 >= 0.0 && s1 < 0.0) ++hits;
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("binary azimuth search reproduces the linear scan exactly") {
    std::mt19937_64 rng(91);
    ReachCone cone = build_reach_cone(kReference, 64);
    for (int i = 0; i < 5000; ++i) {
        Vec3 L = oracles::random_unit(rng);
        InclusionResult a = point_in_cone(cone, L, WedgeSearch::LinearScan);
        InclusionResult b = point_in_cone(cone, L, WedgeSearch::BinaryAzimuth);
        CHECK(a.wedge_index == b.wedge_index);
        CHECK(a.signed_distance_d == b.signed_distance_d);
        CHECK(a.inside == b.inside);
    }
}

TEST_CASE("shrinking the cone never flips outside to inside") {
    std::mt19937_64 rng(13);
    ReachCone big = build_reach_cone({120.0, 60.0, 130.0, 40.0}, 64);
    ReachCone small = build_reach_cone({90.0, 45.0, 100.0, 30.0}, 64);
    for (int i = 0; i < 2000; ++i) {
        Vec3 L = oracles::random_unit(rng);
        bool in_big = point_in_cone(big, L).inside;
        bool in_small = point_in_cone(small, L).inside;
        if (in_small) CHECK(in_big);
    }
}

TEST_CASE("signed distance is continuous along boundary-crossing paths") {
    std::mt19937_64 rng(4242);
    ReachCone cone = build_reach_cone(kReference, 64);
    int crossings_checked = 0;
    while (crossings_checked < 20) {
        Vec3 a = oracles::random_unit(rng);
        Vec3 b = oracles::random_unit(rng);
        if (point_in_cone(cone, a).inside == point_in_cone(cone, b).inside) continue;
        // bisect to the crossing, then walk +/- 0.02 rad at 1e-4 rad steps
        Vec3 lo = a, hi = b;
        for (int k = 0; k < 60; ++k) {
            Vec3 mid = normalized(slerp(lo, hi, 0.5));
            (point_in_cone(cone, mid).inside == point_in_cone(cone, lo).inside ? lo : hi) = mid;
        }
        Vec3 crossing = normalized(slerp(lo, hi, 0.5));
        Vec3 axis = normalized(cross(a, b));
        double prev_d = 0.0;
        bool first = true;
        for (double s = -0.02; s <= 0.02; s += 1e-4) {
            Vec3 L = rotate_about(crossing, axis, s);
            double d = point_in_cone(cone, normalized(L)).signed_distance_d;
            if (!first) CHECK(std::fabs(d - prev_d) < 1e-3);
            prev_d = d;
            first = false;
        }
        ++crossings_checked;
    }
}

TEST_CASE("closest_surface_rotation basics") {
    ReachCone cone = build_reach_cone({90.0, 90.0, 90.0, 90.0}, 64);

    SUBCASE("inside pose reports zero error") {
        InclusionResult res = point_in_cone(cone, arm_direction(0.0, deg2rad(30.0)));
        REQUIRE(res.inside);
        AngularError err = closest_surface_rotation(cone, res);
        CHECK(err.rotation_angle_phi == 0.0);
        CHECK(err.flexion_error_rad == 0.0);
        CHECK(err.abduction_error_rad == 0.0);
        CHECK(err.humeral_error_rad == 0.0);
    }

    SUBCASE("10 degrees beyond the pure-abduction boundary") {
        // the symmetric-90 boundary is the equator, itself a great circle, so
        // the per-wedge projection recovers the meridian distance exactly
        Vec3 L = arm_direction(0.0, deg2rad(100.0));
        InclusionResult res = point_in_cone(cone, L);
        REQUIRE_FALSE(res.inside);
        AngularError err = closest_surface_rotation(cone, res);
        CHECK(rad2deg(err.rotation_angle_phi) == doctest::Approx(10.0).epsilon(0.01));
        CHECK(std::fabs(err.abduction_error_rad) ==
              doctest::Approx(err.rotation_angle_phi).epsilon(1e-9));
        CHECK(std::fabs(err.flexion_error_rad) < 1e-9);
        CHECK(std::fabs(err.humeral_error_rad) < 1e-9);
    }
}

TEST_CASE("rotation by phi about a lands on the wedge surface") {
    std::mt19937_64 rng(314);
    ReachCone cone = build_reach_cone(kReference, 64);
    int exterior = 0;
    for (int i = 0; i < 4000 && exterior < 500; ++i) {
        Vec3 L = oracles::random_unit(rng);
        InclusionResult res = point_in_cone(cone, L);
        if (res.inside) continue;
        ++exterior;
        AngularError err = closest_surface_rotation(cone, res);
        Vec3 rotated = rotate_about(L, err.rotation_axis_a, err.rotation_angle_phi);
        // the rotated vector lies on the wedge's edge great circle
        CHECK(std::fabs(dot(cone.edge_normals_B[res.wedge_index], rotated)) < 1e-6);
        // and the per-axis decomposition reassembles the rotation vector
        Vec3 e = err.rotation_axis_a * err.rotation_angle_phi;
        CHECK(std::fabs(dot(e, flexion_axis()) - err.flexion_error_rad) < 1e-12);
        CHECK(std::fabs(dot(e, abduction_axis()) - err.abduction_error_rad) < 1e-12);
        CHECK(std::fabs(dot(e, humeral_axis_at_rest()) - err.humeral_error_rad) < 1e-12);
    }
    CHECK(exterior == 500);
}

TEST_CASE("phi approximates the boundary distance where the wedge is locally nearest") {
    // the projection is a per-wedge construction. Whenever the globally
    // nearest boundary section lies on the query's own wedge, phi agrees
    // with the true distance to within 2 degrees; elsewhere the per-wedge
    // value is only an upper bound against its own edge arc.
    std::mt19937_64 rng(2718);
    ReachCone cone = build_reach_cone(kReference, 64);
    int local = 0, exterior = 0;
    for (int i = 0; i < 40000 && local < 200; ++i) {
        Vec3 L = oracles::random_unit(rng);
        InclusionResult res = point_in_cone(cone, L);
        if (res.inside) continue;
        ++exterior;
        AngularError err = closest_surface_rotation(cone, res);

        // distance to the wedge's own edge arc always dominates phi
        const Vec3 own_edge[2] = {cone.boundary_points[res.wedge_index],
                                  cone.boundary_points[(res.wedge_index + 1) % cone.size()]};
        double own_arc = oracles::boundary_distance_rad(own_edge, L, 512);
        CHECK(err.rotation_angle_phi <= own_arc + 1e-9);

        int nearest_edge = -1;
        double truth =
            oracles::boundary_distance_rad(cone.boundary_points, L, 128, &nearest_edge);
        if (nearest_edge != res.wedge_index) continue;
        // locality also needs the projection to land within the edge arc,
        // not on the circle's far extension
        Vec3 landed = rotate_about(L, err.rotation_axis_a, err.rotation_angle_phi);
        double span = angle_between(own_edge[0], own_edge[1]);
        if (angle_between(own_edge[0], landed) + angle_between(landed, own_edge[1]) >
            span + 1e-9)
            continue;
        ++local;
        CHECK(err.rotation_angle_phi >= truth - deg2rad(2.0));
        CHECK(err.rotation_angle_phi <= truth + deg2rad(2.0));
    }
    CHECK(local == 200);
    CHECK(exterior >= local);
}
