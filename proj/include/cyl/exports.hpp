#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyl/geom.hpp"
#include "cyl/platonic.hpp"

// Serialization of configurations and curves. Writers emit bytes directly so
// identical inputs give identical files.

namespace cyl {

// Shortest decimal form with 17 significant digits ("%.17g").
std::string format_full(double x);

// 15 significant digits, used for angles in human-readable tables.
std::string format_angle(double x);

// Named delta values per pair, exact forms evaluated at full precision:
//   o6        pi/4
//   delta-max argmax of the min curve (T: pi/4, O: arctan(3^(1/4)/sqrt 2),
//             I: arctan sqrt(t0) with t0 the relevant sextic root)
//   min-1..3  interior zeros of the min curve in increasing order
// Numeric strings are parsed as radians. Unknown names and out-of-range
// minima indices are invalid-argument errors.
double parse_delta_spec(Pair p, const std::string& spec);

// Touching radius at delta: radius_from_distance of the configuration's
// minimum distance.
double touching_radius(Pair p, double delta);

// "auto" -> touching radius at delta; otherwise parsed as a number.
double parse_radius_spec(Pair p, double delta, const std::string& spec);

// CSV of the min curve: header delta,orbit_<label>...,min,active,radius and
// `samples` uniform rows over [0, pi/2]. The active column lists the orbit
// labels attaining the minimum, joined by '+'.
void write_curve_csv(std::ostream& os, Pair p, int samples);

// {"pair": ..., "delta": ..., "radius": ..., "lines": [{"tangency": [...],
// "direction": [...]}]} with every real at 17 significant digits.
void write_lines_json(std::ostream& os, Pair p, double delta, double radius,
                      const std::vector<TangentLine>& lines);

// One row per line: index, tangency, direction.
void write_lines_csv(std::ostream& os, const std::vector<TangentLine>& lines);

// Wavefront OBJ: each line becomes a cylinder of the given radius truncated
// to [-half_length, half_length] along its direction, tessellated as a 48-gon
// prism with end caps. With `sphere`, a unit-sphere mesh is appended.
void write_cylinders_obj(std::ostream& os, const std::vector<TangentLine>& lines,
                         double radius, double half_length, bool sphere);

struct LinesFile {
    std::string pair;
    double delta = 0.0;
    double radius = 0.0;
    std::vector<TangentLine> lines;
};

// Parses a JSON document produced by write_lines_json.
LinesFile read_lines_json(std::istream& is);

}  // namespace cyl
