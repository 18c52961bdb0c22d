#include "doctest.h"

#include <random>

#include "shoulder/errors.hpp"
#include "shoulder/kinematics.hpp"

using namespace shoulder;

namespace {

JointPose pose_of(double theta_deg, double phi_deg, double gamma_deg = 0.0) {
    JointPose p;
    p.theta_flexion = deg2rad(theta_deg);
    p.phi_abduction = deg2rad(phi_deg);
    p.gamma_humeral = deg2rad(gamma_deg);
    return p;
}

} // namespace

TEST_CASE("spherical_fk matches the closed form") {
    CartesianPoint p = spherical_fk(pose_of(0.0, 0.0), 1.0);
    CHECK(p.x == doctest::Approx(0.0));
    CHECK(p.y == doctest::Approx(0.0));
    CHECK(p.z == doctest::Approx(1.0));

    CartesianPoint q = spherical_fk(pose_of(90.0, 90.0), 0.3);
    CHECK(q.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(q.y == doctest::Approx(0.3));
    CHECK(q.z == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spherical_fk preserves the radius on random poses") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
    std::uniform_real_distribution<double> rad(0.05, 2.0);
    for (int i = 0; i < 1000; ++i) {
        double r = rad(rng);
        JointPose p;
        p.theta_flexion = ang(rng);
        p.phi_abduction = ang(rng);
        CartesianPoint c = spherical_fk(p, r);
        double n = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
        CHECK(std::fabs(n - r) < 1e-12 * r);
    }
}

TEST_CASE("serial_fk matches the linkage equations") {
    CartesianPoint p = serial_fk({0.0, 0.0, 0.0}, 1.0);
    CHECK(p.x == doctest::Approx(3.0));
    CHECK(p.y == doctest::Approx(0.0));
    CHECK(p.z == doctest::Approx(0.0));

    CartesianPoint q = serial_fk({deg2rad(90.0), 0.0, 0.0}, 1.0);
    CHECK(q.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(q.y == doctest::Approx(3.0));
    CHECK(q.z == doctest::Approx(0.0));
}

TEST_CASE("linearized serial tracking drifts off the sphere") {
    // the wrist joint follows a radius-r arc with one Gauss-Newton update per
    // sweep step, as a Jacobian-linearized follower would run; the leftover
    // radial deviation is the design gap the single-joint-center build avoids
    const double r = 1.0;
    double theta3 = kPi;  // folded start: on the sphere at theta2 = 0
    double max_dev = 0.0;
    for (int k = 1; k <= 45; ++k) {
        double theta2 = deg2rad(2.0 * k);
        CartesianPoint target{r * std::cos(theta2), 0.0, r * std::sin(theta2)};
        CartesianPoint p = serial_fk({0.0, theta2, theta3}, r);
        // single linearized update of theta3 toward the target arc point
        double jx = -r * std::sin(theta2 + theta3);
        double jz = r * std::cos(theta2 + theta3);
        double jtj = jx * jx + jz * jz;
        double jtd = jx * (p.x - target.x) + jz * (p.z - target.z);
        if (jtj > 1e-12) theta3 -= jtd / jtj;
        p = serial_fk({0.0, theta2, theta3}, r);
        max_dev = std::max(max_dev,
                           std::fabs(std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z) - r));
    }
    CHECK(max_dev > 1e-9 * r);
    CHECK(max_dev < 0.2 * r);
}

TEST_CASE("identity mount passes motor angles through") {
    ChainAngles out = intrinsic_to_extrinsic({deg2rad(25.0), deg2rad(-40.0), deg2rad(10.0)},
                                             Mat3::identity());
    CHECK(out.flexion == doctest::Approx(deg2rad(25.0)).epsilon(1e-12));
    CHECK(out.abduction == doctest::Approx(deg2rad(-40.0)).epsilon(1e-12));
    CHECK(out.humeral == doctest::Approx(deg2rad(10.0)).epsilon(1e-12));
}

TEST_CASE("90 degree mount about Z swaps flexion into abduction") {
    Mat3 mount = Mat3::rot_z(deg2rad(90.0));
    ChainAngles out = intrinsic_to_extrinsic({deg2rad(10.0), 0.0, 0.0}, mount);
    // numerically composed: Rz(90) Ry(10) Rz(-90) = Rx(-10), i.e. abduction +10
    CHECK(out.flexion == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(out.abduction == doctest::Approx(deg2rad(10.0)).epsilon(1e-9));
    CHECK(out.humeral == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("intrinsic/extrinsic conversion round-trips away from the singular band") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_real_distribution<double> abd(-deg2rad(80.0), deg2rad(80.0));
    Mat3 mount = Mat3::rot_z(0.37) * Mat3::rot_y(-0.81) * Mat3::rot_x(1.21);
    REQUIRE(is_rotation(mount));
    int tested = 0;
    for (int i = 0; i < 1000; ++i) {
        std::array<double, 3> motor{ang(rng), abd(rng), ang(rng)};
        ChainAngles ext = intrinsic_to_extrinsic(motor, mount);
        if (ext.near_singularity) continue;
        ChainAngles back = extrinsic_to_intrinsic({ext.flexion, ext.abduction, ext.humeral},
                                                  mount);
        ++tested;
        CHECK(std::fabs(back.flexion - motor[0]) < 1e-9);
        CHECK(std::fabs(back.abduction - motor[1]) < 1e-9);
        CHECK(std::fabs(back.humeral - motor[2]) < 1e-9);
    }
    CHECK(tested > 800);
}

TEST_CASE("mount must be a proper rotation") {
    Mat3 bad;
    bad.m = {1, 0, 0, 0, 1, 0, 0, 0, -1};  // reflection
    CHECK_THROWS_AS(intrinsic_to_extrinsic({0, 0, 0}, bad), RangeError);
}

TEST_CASE("singularity detection bands") {
    CHECK(detect_singularity(pose_of(0.0, 90.0), deg2rad(1.0)));
    CHECK(detect_singularity(pose_of(0.0, 89.5), deg2rad(1.0)));
    CHECK(detect_singularity(pose_of(0.0, -90.0), deg2rad(1.0)));
    CHECK(detect_singularity(pose_of(0.0, 270.0), deg2rad(1.0)));
    CHECK_FALSE(detect_singularity(pose_of(0.0, 0.0), deg2rad(1.0)));
    CHECK_FALSE(detect_singularity(pose_of(0.0, 88.0), deg2rad(1.0)));
    CHECK_FALSE(detect_singularity(pose_of(0.0, 180.0), deg2rad(1.0)));
}

TEST_CASE("flexion and humeral axes align at the singularity") {
    for (double phi_deg : {89.0, 90.0, 91.0}) {
        Vec3 h = humeral_axis_direction(deg2rad(33.0), deg2rad(phi_deg));
        double cross_norm = norm(cross(h, Vec3{0.0, 1.0, 0.0}));
        CHECK(cross_norm < std::sin(deg2rad(2.0)));
    }
    Vec3 h0 = humeral_axis_direction(deg2rad(33.0), 0.0);
    CHECK(norm(cross(h0, Vec3{0.0, 1.0, 0.0})) > 0.9);
}
