#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

// Elementary 3D geometry for line configurations tangent to the unit sphere:
// vectors, proper rotations, tangent lines, skew-line distance, and the
// conversion between a pairwise line distance and the touching cylinder radius.

namespace cyl {

inline constexpr double pi = 3.14159265358979323846;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }
    Vec3 normalized() const { return *this / norm(); }

    double dist(const Vec3& o) const { return (*this - o).norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// A line tangent to the unit sphere, stored as its tangency point and a unit
// direction. The direction is orthogonal to the tangency point, so the line
// touches the sphere exactly at `tangency`.
struct TangentLine {
    Vec3 tangency;
    Vec3 direction;
};

// Proper rotation as a row-major 3x3 matrix.
struct Rotation {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Rotation compose(const Rotation& o) const;  // this * o
    TangentLine apply(const TangentLine& l) const {
        return {apply(l.tangency), apply(l.direction)};
    }
    double max_entry_diff(const Rotation& o) const;
    double trace() const { return m[0] + m[4] + m[8]; }
    bool is_proper(double tol = 1e-12) const;
};

// Rodrigues rotation by `angle` about a unit `axis`, right-hand rule.
// Throws std::domain_error if the axis is not unit length.
Rotation rotation_about_axis(const Vec3& axis, double angle);

// Euclidean distance between two infinite lines. Parallel lines fall back to
// point-to-line distance; identical lines give 0.
double line_distance(const TangentLine& a, const TangentLine& b);

// Midpoint of the shortest segment between two (nearly) intersecting lines.
Vec3 line_common_point(const TangentLine& a, const TangentLine& b);

// Touching cylinder radius r = d / (2 - d) for a pairwise line distance d.
// Valid for 0 <= d < 2; throws std::domain_error otherwise.
double radius_from_distance(double d);

// Inverse conversion d = 2r / (1 + r).
double distance_from_radius(double r);

// Rotate a tangent line by `delta` about the sphere diameter through its
// tangency point (the outward normal), counterclockwise seen from outside.
TangentLine rotate_tangent_line(const TangentLine& l, double delta);

// Checks the tangent-line invariants: unit tangency, unit direction,
// orthogonality. Used by constructors of derived data and by tests.
bool is_valid_tangent_line(const TangentLine& l, double tol = 1e-12);

}  // namespace cyl
