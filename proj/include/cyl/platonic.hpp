#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyl/geom.hpp"

// Midsphere-normalized Platonic solids, their proper rotation groups, edge
// tangent lines, neighboring edge pairs, and the orbits of unordered edge
// pairs under the group action.

namespace cyl {

// The three dual pairs, named by the solid taken as the starting position.
enum class Pair { T, O, I };

Pair parse_pair(const std::string& s);          // "T" | "O" | "I"
const char* pair_name(Pair p);                  // "T" / "O" / "I"
int edge_count(Pair p);                         // 6 / 12 / 30

enum class SolidName { tetrahedron, octahedron, cube, icosahedron, dodecahedron };

struct Solid {
    SolidName name;
    std::vector<Vec3> vertices;                  // norm h each, sorted canonically
    std::vector<std::pair<int, int>> edges;      // i < j, lexicographic order
    int vertex_degree = 0;                       // edges meeting at each vertex
    double h = 0.0;                              // circumradius at midradius 1
};

// Builds a solid scaled so that all edge midpoints lie on the unit sphere.
// Vertices are sorted by coordinates (tolerance 1e-9) and edges listed in
// lexicographic order on vertex indices, so the construction is canonical.
Solid build_solid(SolidName name);

Solid base_solid(Pair p);   // tetrahedron / octahedron / icosahedron
Solid dual_solid(Pair p);   // reflected tetrahedron / cube / dodecahedron

struct RotationGroup {
    std::vector<Rotation> elements;  // identity first
};

// Full proper rotation group, generated by closure from a vertex-axis rotation
// by 2*pi/degree and an edge-midpoint half turn. Orders 12 / 24 / 60.
RotationGroup rotation_group(Pair p);

// One tangent line per edge: tangency at the (unit) edge midpoint, direction
// along the edge. Order matches the solid's canonical edge order.
std::vector<TangentLine> edge_tangent_lines(const Solid& s);

// The permutation of edge indices induced by a rotation that maps the solid
// to itself. Directions are matched up to sign. Throws if any edge fails to
// match uniquely within the tolerance.
std::vector<int> edge_permutation(const Solid& s, const std::vector<TangentLine>& lines,
                                  const Rotation& r, double tol = 1e-9);

// Unordered pairs of edges that share a vertex and map to one another under
// the 2*pi/k rotation about that vertex (k = vertex degree).
std::vector<std::pair<int, int>> neighboring_pairs(const Solid& s);

struct Orbit {
    int label = 0;                               // canonical: size, then d^2(0.1)
    std::pair<int, int> representative;          // lexicographically smallest member
    std::vector<std::pair<int, int>> members;
};

struct OrbitTable {
    std::vector<Orbit> orbits;
    int opposite_label = -1;     // the constant-distance-2 orbit, -1 if absent
    int neighboring_label = -1;  // orbit equal to the neighboring-pairs set
};

// Orbits of unordered pairs of distinct edges under the proper rotation group.
// Labels are assigned by ascending orbit size, ties broken by the squared
// representative distance at delta = 0.1.
OrbitTable edge_pair_orbits(Pair p);

// Cached per-pair construction shared by everything downstream.
struct PairContext {
    Pair pair;
    Solid solid;
    std::vector<TangentLine> lines;
    RotationGroup group;
    OrbitTable orbits;
};

const PairContext& context(Pair p);

}  // namespace cyl
