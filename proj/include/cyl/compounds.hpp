#pragma once

#include <vector>

#include "cyl/geom.hpp"
#include "cyl/platonic.hpp"

// Structure of a rotated configuration at a zero of the minimum-distance
// curve: the lines meet, and the incidences assemble into closed polygons or
// polygonal skeletons. Also the Gauss linking number of closed polygons and
// the radius of the largest ball that fits in the complement of a cylinder
// family through the origin.

namespace cyl {

struct Intersection {
    int i = 0, j = 0;    // line indices, i < j
    Vec3 point;
};

struct IntersectionGraph {
    std::vector<Intersection> crossings;
    std::vector<std::vector<int>> adjacency;  // line index -> crossing indices
};

// All pairwise meeting points of the lines, at the given distance tolerance.
IntersectionGraph intersection_graph(const std::vector<TangentLine>& lines,
                                     double tol = 1e-9);

enum class ComponentShape { triangle, skeleton, star };

struct Component {
    ComponentShape shape = ComponentShape::triangle;
    std::vector<int> line_indices;
    // Closed cycle of vertices for triangles and stars; for skeletons, the
    // distinct vertices without an ordering.
    std::vector<Vec3> cycle;
};

struct Compound {
    std::vector<Component> components;
    std::vector<Vec3> vertices;       // all distinct intersection points
    std::vector<TangentLine> lines;   // the configuration the compound came from
};

// Groups the lines into connected components of the intersection graph and
// identifies each component's shape from its line count: 3 lines close into a
// triangle, 6 lines form a tetrahedral skeleton, 5 lines a pentagram. Vertex
// clustering tolerance 1e-6.
Compound extract_compound(const std::vector<TangentLine>& lines, double tol = 1e-9);

struct VertexStats {
    int vertex_count = 0;
    double circumradius = 0.0;        // largest vertex norm
    double min_pairwise = 0.0;        // smallest distance between two vertices
    int nearest_neighbor_count = 0;   // neighbors at min_pairwise per vertex,
                                      // -1 when the count is not uniform
};

// Deduplicates the vertices (tolerance 1e-9) and reports the hull signature.
VertexStats vertex_stats(const std::vector<Vec3>& vertices);

// Gauss linking number of two closed polygonal loops, each given as its
// vertex cycle. Computed as a sum of signed solid angles; the result must lie
// within 1e-6 of an integer or the call throws. Loops with a vertex pair
// closer than 1e-9 across the two loops are rejected as degenerate.
int linking_number(const std::vector<Vec3>& loop_a, const std::vector<Vec3>& loop_b);

// The inner-pentagon cycles of a pentagram compound, one per star, each
// ordered as a closed convex pentagon.
std::vector<std::vector<Vec3>> star_inner_pentagons(const Compound& c);

// Common radius of equal balls centered at the given unit vertices of a
// sphere, scaled so the two closest balls touch: with s = sin(theta_min / 2)
// for the smallest angle between two distinct vertices, r solves
// sin(theta_min / 2) = r / (1 + r), i.e. r = s / (1 - s). Coincident
// vertices and a minimal angle of pi (s within 1e-12 of 1) are domain
// errors.
double id_ball_radius(const std::vector<Vec3>& vertices);

// Verifies that a component's lines lie in a plane through the origin
// perpendicular to an axis of the pair's rotation group (a 3-fold or 5-fold
// vertex or face axis), and that the group moves one component onto the
// whole compound. Returns true when both hold at tolerance 1e-9.
bool axial_generation_check(Pair p, const Compound& c, double tol = 1e-9);

}  // namespace cyl
