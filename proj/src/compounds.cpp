#include "cyl/compounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyl {

namespace {

// Closest-distance between two segments [p0,p1] and [q0,q1].
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
    const Vec3 u = p1 - p0;
    const Vec3 v = q1 - q0;
    const Vec3 w = p0 - q0;
    const double a = u.dot(u), b = u.dot(v), c = v.dot(v);
    const double d = u.dot(w), e = v.dot(w);
    const double den = a * c - b * b;
    double s = 0.0, t = 0.0;
    if (den > 1e-15) {
        s = std::clamp((b * e - c * d) / den, 0.0, 1.0);
    }
    t = (b * s + e) / c;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-d / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - d) / a, 0.0, 1.0);
    }
    return (p0 + u * s - (q0 + v * t)).norm();
}

// Signed solid angle of the triangle (a, b, c) seen from the origin.
double solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double na = a.norm(), nb = b.norm(), nc = c.norm();
    const double num = a.dot(b.cross(c));
    const double den = na * nb * nc + a.dot(b) * nc + b.dot(c) * na + c.dot(a) * nb;
    return 2.0 * std::atan2(num, den);
}

std::vector<Vec3> cluster_points(const std::vector<Vec3>& pts, double tol) {
    std::vector<Vec3> out;
    for (const auto& p : pts) {
        bool found = false;
        for (const auto& q : out)
            if (p.dist(q) < tol) { found = true; break; }
        if (!found) out.push_back(p);
    }
    return out;
}

// In-plane angular order of points around their centroid.
std::vector<int> angular_order(const std::vector<Vec3>& pts, const Vec3& center,
                               const Vec3& normal) {
    const Vec3 u = (pts[0] - center - normal * (pts[0] - center).dot(normal)).normalized();
    const Vec3 w = normal.cross(u);
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> ang(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec3 r = pts[i] - center;
        ang[i] = std::atan2(r.dot(w), r.dot(u));
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ang[a] < ang[b]; });
    return idx;
}

Component make_triangle(const std::vector<int>& line_idx,
                        const std::vector<Intersection>& crossings,
                        const std::vector<int>& crossing_idx) {
    if (crossing_idx.size() != 3)
        throw std::domain_error("extract_compound: triangle component with " +
                                std::to_string(crossing_idx.size()) + " crossings");
    // Order the three corners so consecutive ones share a line: with lines
    // a < b < c the cycle (ab), (bc), (ca) closes up.
    const int a = line_idx[0], b = line_idx[1], c = line_idx[2];
    Component comp;
    comp.shape = ComponentShape::triangle;
    comp.line_indices = line_idx;
    auto corner = [&](int l1, int l2) -> Vec3 {
        for (int ci : crossing_idx) {
            const auto& cr = crossings[ci];
            if ((cr.i == l1 && cr.j == l2) || (cr.i == l2 && cr.j == l1)) return cr.point;
        }
        throw std::domain_error("extract_compound: triangle is missing a corner");
    };
    comp.cycle = {corner(a, b), corner(b, c), corner(c, a)};
    return comp;
}

Component make_skeleton(const std::vector<int>& line_idx,
                        const std::vector<Intersection>& crossings,
                        const std::vector<int>& crossing_idx) {
    std::vector<Vec3> pts;
    pts.reserve(crossing_idx.size());
    for (int ci : crossing_idx) pts.push_back(crossings[ci].point);
    Component comp;
    comp.shape = ComponentShape::skeleton;
    comp.line_indices = line_idx;
    comp.cycle = cluster_points(pts, 1e-6);
    if (comp.cycle.size() != 4)
        throw std::domain_error("extract_compound: skeleton with " +
                                std::to_string(comp.cycle.size()) + " distinct vertices");
    return comp;
}

Component make_star(const std::vector<int>& line_idx,
                    const std::vector<Intersection>& crossings,
                    const std::vector<int>& crossing_idx,
                    const std::vector<TangentLine>& lines) {
    if (crossing_idx.size() != 10)
        throw std::domain_error("extract_compound: star component with " +
                                std::to_string(crossing_idx.size()) + " crossings");
    std::vector<Vec3> pts;
    for (int ci : crossing_idx) pts.push_back(crossings[ci].point);

    Vec3 center{0, 0, 0};
    for (const auto& p : pts) center = center + p;
    center = center / static_cast<double>(pts.size());
    const Vec3 normal =
        lines[line_idx[0]].direction.cross(lines[line_idx[1]].direction).normalized();

    // Outer corners sit farther from the center than the self-intersections.
    std::vector<double> radii;
    for (const auto& p : pts) radii.push_back((p - center).norm());
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return radii[a] > radii[b]; });
    std::vector<Vec3> outer;
    for (int i = 0; i < 5; ++i) outer.push_back(pts[idx[i]]);

    // Visit every second corner in angular order: that is the pentagram path.
    const auto order = angular_order(outer, center, normal);
    Component comp;
    comp.shape = ComponentShape::star;
    comp.line_indices = line_idx;
    for (int s = 0, at = 0; s < 5; ++s, at = (at + 2) % 5) comp.cycle.push_back(outer[order[at]]);
    return comp;
}

}  // namespace

IntersectionGraph intersection_graph(const std::vector<TangentLine>& lines, double tol) {
    IntersectionGraph g;
    g.adjacency.resize(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (line_distance(lines[i], lines[j]) >= tol) continue;
            g.adjacency[i].push_back(static_cast<int>(g.crossings.size()));
            g.adjacency[j].push_back(static_cast<int>(g.crossings.size()));
            g.crossings.push_back({static_cast<int>(i), static_cast<int>(j),
                                   line_common_point(lines[i], lines[j])});
        }
    }
    return g;
}

Compound extract_compound(const std::vector<TangentLine>& lines, double tol) {
    const IntersectionGraph g = intersection_graph(lines, tol);
    const int n = static_cast<int>(lines.size());

    // Connected components of lines through shared crossings.
    std::vector<int> comp_of(n, -1);
    int ncomp = 0;
    for (int seed = 0; seed < n; ++seed) {
        if (comp_of[seed] >= 0) continue;
        std::vector<int> stack{seed};
        comp_of[seed] = ncomp;
        while (!stack.empty()) {
            const int at = stack.back();
            stack.pop_back();
            for (int ci : g.adjacency[at]) {
                const auto& cr = g.crossings[ci];
                const int other = cr.i == at ? cr.j : cr.i;
                if (comp_of[other] < 0) {
                    comp_of[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }

    Compound result;
    result.lines = lines;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> line_idx;
        for (int i = 0; i < n; ++i)
            if (comp_of[i] == c) line_idx.push_back(i);
        std::vector<int> crossing_idx;
        for (std::size_t ci = 0; ci < g.crossings.size(); ++ci)
            if (comp_of[g.crossings[ci].i] == c) crossing_idx.push_back(static_cast<int>(ci));

        switch (line_idx.size()) {
            case 3:
                result.components.push_back(make_triangle(line_idx, g.crossings, crossing_idx));
                break;
            case 6:
                result.components.push_back(make_skeleton(line_idx, g.crossings, crossing_idx));
                break;
            case 5:
                result.components.push_back(make_star(line_idx, g.crossings, crossing_idx, lines));
                break;
            default:
                throw std::domain_error(
                    "extract_compound: component with " + std::to_string(line_idx.size()) +
                    " lines matches no known figure (triangle 3, skeleton 6, star 5)");
        }
    }

    std::vector<Vec3> all;
    for (const auto& cr : g.crossings) all.push_back(cr.point);
    result.vertices = cluster_points(all, 1e-6);
    return result;
}

VertexStats vertex_stats(const std::vector<Vec3>& vertices) {
    const std::vector<Vec3> verts = cluster_points(vertices, 1e-9);
    VertexStats st;
    st.vertex_count = static_cast<int>(verts.size());
    for (const auto& v : verts) st.circumradius = std::max(st.circumradius, v.norm());
    if (verts.size() < 2) return st;

    double dmin = 1e300;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            dmin = std::min(dmin, verts[i].dist(verts[j]));
    st.min_pairwise = dmin;

    int common = -2;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int count = 0;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (i != j && std::abs(verts[i].dist(verts[j]) - dmin) < 1e-9) ++count;
        if (common == -2) common = count;
        else if (common != count) { common = -1; break; }
    }
    st.nearest_neighbor_count = common;
    return st;
}

int linking_number(const std::vector<Vec3>& loop_a, const std::vector<Vec3>& loop_b) {
    if (loop_a.size() < 3 || loop_b.size() < 3)
        throw std::invalid_argument("linking_number: loops need at least 3 vertices");
    const std::size_t na = loop_a.size(), nb = loop_b.size();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            if (segment_distance(loop_a[i], loop_a[(i + 1) % na], loop_b[j],
                                 loop_b[(j + 1) % nb]) < 1e-9)
                throw std::domain_error("linking_number: loops closer than 1e-9, degenerate");

    double total = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
        const Vec3& p1 = loop_a[i];
        const Vec3& p2 = loop_a[(i + 1) % na];
        for (std::size_t j = 0; j < nb; ++j) {
            const Vec3& q1 = loop_b[j];
            const Vec3& q2 = loop_b[(j + 1) % nb];
            const Vec3 a = p1 - q1, b = p1 - q2, c = p2 - q2, d = p2 - q1;
            total += solid_angle(a, b, c) + solid_angle(a, c, d);
        }
    }
    const double lk = total / (4.0 * pi);
    const double rounded = std::round(lk);
    if (std::abs(lk - rounded) >= 1e-6)
        throw std::domain_error("linking_number: sum is not close to an integer");
    return static_cast<int>(rounded);
}

std::vector<std::vector<Vec3>> star_inner_pentagons(const Compound& c) {
    std::vector<std::vector<Vec3>> pentagons;
    for (const auto& comp : c.components) {
        if (comp.shape != ComponentShape::star)
            throw std::domain_error("star_inner_pentagons: compound has a non-star component");
        const auto& s = comp.cycle;  // pentagram visiting order
        // Star edge i runs s[i] -> s[i+1]; it crosses edges i+2 and i+3. The
        // five crossings with step +2 cover each inner corner once.
        std::vector<Vec3> inner;
        Vec3 center{0, 0, 0};
        for (int i = 0; i < 5; ++i) {
            const Vec3 d1 = (s[(i + 1) % 5] - s[i]).normalized();
            const Vec3 d2 = (s[(i + 3) % 5] - s[(i + 2) % 5]).normalized();
            inner.push_back(line_common_point({s[i], d1}, {s[(i + 2) % 5], d2}));
            center = center + inner.back();
        }
        center = center / 5.0;
        const Vec3 normal = (s[1] - s[0]).cross(s[2] - s[0]).normalized();
        const auto order = angular_order(inner, center, normal);
        std::vector<Vec3> convex;
        for (int k : order) convex.push_back(inner[k]);
        pentagons.push_back(std::move(convex));
    }
    return pentagons;
}

double id_ball_radius(const std::vector<Vec3>& vertices) {
    if (vertices.size() < 2)
        throw std::invalid_argument("id_ball_radius: need at least 2 vertices");
    double theta_min = pi;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const Vec3& a = vertices[i];
            const Vec3& b = vertices[j];
            const double theta = std::atan2(a.cross(b).norm(), a.dot(b));
            if (theta < 1e-12)
                throw std::domain_error("id_ball_radius: coincident directions");
            theta_min = std::min(theta_min, theta);
        }
    }
    const double s = std::sin(theta_min / 2.0);
    if (s >= 1.0 - 1e-12)
        throw std::domain_error("id_ball_radius: antipodal closest pair, radius unbounded");
    return s / (1.0 - s);
}

bool axial_generation_check(Pair p, const Compound& c, double tol) {
    if (c.components.empty()) return false;
    const auto& comp = c.components.front();

    int fold = 0;
    if (comp.shape == ComponentShape::triangle) fold = 3;
    else if (comp.shape == ComponentShape::star) fold = 5;
    else return false;  // skeletons are not planar figures

    // The component must lie in a plane through the origin.
    Vec3 normal = (comp.cycle[1] - comp.cycle[0]).cross(comp.cycle[2] - comp.cycle[0]);
    if (normal.norm() < tol) return false;
    normal = normal.normalized();
    for (const auto& v : comp.cycle)
        if (std::abs(v.dot(normal)) > tol) return false;

    // The plane normal must be a fold-order axis of the rotation group.
    const auto& ctx = context(p);
    const Rotation probe = rotation_about_axis(normal, 2.0 * pi / fold);
    bool is_axis = false;
    for (const auto& g : ctx.group.elements)
        if (g.max_entry_diff(probe) < 1e-9) { is_axis = true; break; }
    if (!is_axis) return false;

    // The group orbit of the first component must cover every component.
    auto find_line = [&](const TangentLine& l) {
        for (std::size_t k = 0; k < c.lines.size(); ++k) {
            if (c.lines[k].tangency.dist(l.tangency) < tol &&
                std::abs(std::abs(c.lines[k].direction.dot(l.direction)) - 1.0) < tol)
                return static_cast<int>(k);
        }
        return -1;
    };
    std::vector<int> comp_of(c.lines.size(), -1);
    for (std::size_t ci = 0; ci < c.components.size(); ++ci)
        for (int li : c.components[ci].line_indices) comp_of[li] = static_cast<int>(ci);

    std::vector<bool> covered(c.components.size(), false);
    for (const auto& g : ctx.group.elements) {
        int target = -1;
        bool consistent = true;
        for (int li : comp.line_indices) {
            const int image = find_line(g.apply(c.lines[li]));
            if (image < 0) { consistent = false; break; }
            if (target < 0) target = comp_of[image];
            else if (target != comp_of[image]) { consistent = false; break; }
        }
        if (!consistent || target < 0) return false;
        covered[target] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace cyl
