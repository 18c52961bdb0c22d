#ifndef SHOULDER_GEOM_HPP
#define SHOULDER_GEOM_HPP

#include <array>
#include <cmath>

namespace shoulder {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

inline double clamp01(double t) { return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t); }

/// Angle between two unit vectors, robust near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Spherical linear interpolation between unit vectors. Falls back to
/// normalized lerp when the arc is tiny.
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    double ang = angle_between(a, b);
    if (ang < 1e-12) return normalized(a + (b - a) * t);
    double s = std::sin(ang);
    return a * (std::sin((1.0 - t) * ang) / s) + b * (std::sin(t * ang) / s);
}

/// Rodrigues rotation of v by angle about a unit axis.
inline Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

struct Mat3 {
    // row-major
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }

    static Mat3 rot_x(double a) {
        double c = std::cos(a), s = std::sin(a);
        return {{1, 0, 0, 0, c, -s, 0, s, c}};
    }
    static Mat3 rot_y(double a) {
        double c = std::cos(a), s = std::sin(a);
        return {{c, 0, s, 0, 1, 0, -s, 0, c}};
    }
    static Mat3 rot_z(double a) {
        double c = std::cos(a), s = std::sin(a);
        return {{c, -s, 0, s, c, 0, 0, 0, 1}};
    }

    Mat3 transposed() const {
        return {{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
                r.m[i * 3 + j] = s;
            }
        return r;
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
};

/// True if R is orthonormal with det +1 within tol.
inline bool is_rotation(const Mat3& R, double tol = 1e-9) {
    Mat3 s = R * R.transposed();
    Mat3 id = Mat3::identity();
    for (int i = 0; i < 9; ++i)
        if (std::fabs(s.m[i] - id.m[i]) > tol) return false;
    return std::fabs(R.det() - 1.0) <= tol;
}

} // namespace shoulder

#endif
