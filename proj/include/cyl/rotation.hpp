#pragma once

#include <string>
#include <vector>

#include "cyl/geom.hpp"
#include "cyl/platonic.hpp"

// The one-parameter rotation process: each edge tangent line turns by delta
// about the sphere diameter through its tangency point, counterclockwise as
// seen from outside. Pairwise distances between the rotated lines depend only
// on the edge-pair orbit, which gives a small set of branch functions per
// configuration.

namespace cyl {

// All edge lines of the pair's base solid after rotating each by delta.
std::vector<TangentLine> rotated_configuration(Pair p, double delta);

// Squared distance between the rotated lines of the orbit's representative
// pair. Identical (up to roundoff) for every member of the orbit.
double branch_distance_sq(Pair p, int orbit_label, double delta);

// Squared distance between neighboring edge lines of a midsphere-normalized
// solid, as a function of S = 1/circumradius, the half-angle alpha = pi/k at
// a degree-k vertex, and T = tan(delta):
//   4 sin^2(alpha) (1-S^2)^2 T^2 / ((S^2+T^2)(1 - sin^2(alpha) S^2 + cos^2(alpha) T^2))
// Returns 0 in the T = 0 limit.
double neighbor_distance_sq_general(double S, double alpha, double T);

// Branches with individually derived closed forms.
enum class FormId {
    o_neighbor,  // octahedron, pairs sharing a vertex
    o_green,     // octahedron, the other non-constant 12-pair orbit pattern
    i_neighbor,  // icosahedron, pairs sharing a vertex
    i_3,         // icosahedron branch crossing zero at machine zero thrice
    i_5,
    i_8,
    i_9,
};

FormId parse_form_id(const std::string& s);
const char* form_id_name(FormId f);
Pair form_pair(FormId f);

// Evaluates the named closed form. Throws std::domain_error when the form
// does not belong to the pair.
double closed_form_branch(Pair p, FormId f, double delta);

// The orbit label whose sampled branch matches the named closed form to
// within 1e-10 across a probe grid. Throws if no orbit matches.
int orbit_label_for_form(FormId f);

struct MinResult {
    double d_sq = 0.0;
    std::vector<int> active;  // orbit labels within 1e-9 of the minimum
};

// Minimum of the branch functions over all orbits at the given delta,
// together with the labels achieving it.
MinResult min_distance_sq(Pair p, double delta);

// Direct minimum over all unordered line pairs of an explicit configuration,
// as a distance (not squared). Cross-checks the orbit decomposition.
double configuration_min_distance(const std::vector<TangentLine>& lines);

}  // namespace cyl
