#include "cyl/geom.hpp"

#include <algorithm>
#include <cmath>

namespace cyl {

Rotation Rotation::compose(const Rotation& o) const {
    Rotation r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
            r.m[3 * i + j] = s;
        }
    }
    return r;
}

double Rotation::max_entry_diff(const Rotation& o) const {
    double d = 0.0;
    for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
    return d;
}

bool Rotation::is_proper(double tol) const {
    const Vec3 r0{m[0], m[1], m[2]};
    const Vec3 r1{m[3], m[4], m[5]};
    const Vec3 r2{m[6], m[7], m[8]};
    const double det = r0.dot(r1.cross(r2));
    if (std::abs(det - 1.0) > tol) return false;
    if (std::abs(r0.norm_sq() - 1.0) > tol) return false;
    if (std::abs(r1.norm_sq() - 1.0) > tol) return false;
    if (std::abs(r2.norm_sq() - 1.0) > tol) return false;
    if (std::abs(r0.dot(r1)) > tol) return false;
    if (std::abs(r1.dot(r2)) > tol) return false;
    if (std::abs(r2.dot(r0)) > tol) return false;
    return true;
}

Rotation rotation_about_axis(const Vec3& axis, double angle) {
    if (std::abs(axis.norm_sq() - 1.0) > 1e-9) {
        throw std::domain_error("rotation_about_axis: axis must be unit length");
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double x = axis.x, y = axis.y, z = axis.z;
    // R = I + s K + (1 - c) K^2 with K the cross-product matrix of the axis.
    Rotation r;
    r.m = {c + (1 - c) * x * x,     (1 - c) * x * y - s * z, (1 - c) * x * z + s * y,
           (1 - c) * y * x + s * z, c + (1 - c) * y * y,     (1 - c) * y * z - s * x,
           (1 - c) * z * x - s * y, (1 - c) * z * y + s * x, c + (1 - c) * z * z};
    return r;
}

double line_distance(const TangentLine& a, const TangentLine& b) {
    const Vec3 w = b.tangency - a.tangency;
    const Vec3 n = a.direction.cross(b.direction);
    const double nn = n.norm();
    if (nn < 1e-12) {
        // Parallel (or identical): distance from b.tangency to line a.
        const Vec3 along = a.direction * w.dot(a.direction);
        return (w - along).norm();
    }
    return std::abs(w.dot(n)) / nn;
}

Vec3 line_common_point(const TangentLine& a, const TangentLine& b) {
    // Feet of the common perpendicular: solve for parameters s, t minimizing
    // |a(s) - b(t)|, then return the segment midpoint.
    const Vec3 w = a.tangency - b.tangency;
    const double dd = a.direction.dot(b.direction);
    const double denom = 1.0 - dd * dd;
    double s = 0.0, t = 0.0;
    if (denom > 1e-15) {
        const double wa = w.dot(a.direction);
        const double wb = w.dot(b.direction);
        s = (dd * wb - wa) / denom;
        t = (wb - dd * wa) / denom;
    }
    const Vec3 pa = a.tangency + a.direction * s;
    const Vec3 pb = b.tangency + b.direction * t;
    return (pa + pb) * 0.5;
}

double radius_from_distance(double d) {
    if (d < 0.0 || d >= 2.0) {
        throw std::domain_error("radius_from_distance: need 0 <= d < 2");
    }
    return d / (2.0 - d);
}

double distance_from_radius(double r) { return 2.0 * r / (1.0 + r); }

TangentLine rotate_tangent_line(const TangentLine& l, double delta) {
    // The axis is the unit tangency point itself; since the direction is
    // orthogonal to it, Rodrigues reduces to a plane rotation in the tangent
    // plane: d -> d cos(delta) + (a x d) sin(delta).
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    return {l.tangency, l.direction * c + l.tangency.cross(l.direction) * s};
}

bool is_valid_tangent_line(const TangentLine& l, double tol) {
    if (std::abs(l.tangency.norm_sq() - 1.0) > tol) return false;
    if (std::abs(l.direction.norm_sq() - 1.0) > tol) return false;
    if (std::abs(l.tangency.dot(l.direction)) > tol) return false;
    return true;
}

}  // namespace cyl
