#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyl/compounds.hpp"
#include "cyl/criticality.hpp"
#include "cyl/exports.hpp"
#include "cyl/geom.hpp"
#include "cyl/platonic.hpp"
#include "cyl/rotation.hpp"

namespace {

using namespace cyl;

constexpr double kTau = 1.6180339887498948482;  // (1 + sqrt 5) / 2

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

const char* shape_name(ComponentShape s) {
    switch (s) {
        case ComponentShape::triangle: return "triangle";
        case ComponentShape::skeleton: return "tetrahedron skeleton";
        case ComponentShape::star: return "pentagonal star";
    }
    return "?";
}

std::string join_labels(const std::vector<int>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(labels[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
    std::string name;
    double reference = 0.0;
    double computed = 0.0;
    double tol = 0.0;
};

class Verifier {
  public:
    void add(std::string name, double reference, double computed, double tol) {
        checks_.push_back({std::move(name), reference, computed, tol});
    }

    int report() const {
        int failed = 0;
        std::printf("%-52s %-24s %-24s %-10s %-8s %s\n", "check", "reference", "computed",
                    "|diff|", "tol", "status");
        for (const auto& c : checks_) {
            const double diff = std::fabs(c.computed - c.reference);
            const bool ok = diff <= c.tol;
            if (!ok) ++failed;
            std::printf("%-52s %-24s %-24s %-10.3g %-8.1g %s\n", c.name.c_str(),
                        format_full(c.reference).c_str(), format_full(c.computed).c_str(), diff,
                        c.tol, ok ? "PASS" : "FAIL");
        }
        std::printf("\n%zu checks, %d failed\n", checks_.size(), failed);
        return failed == 0 ? 0 : 1;
    }

  private:
    std::vector<Check> checks_;
};

// Largest mismatch between the rotated lines at pi / 2 and the dual solid's
// edge tangent lines, matching each line to its closest partner.
double duality_deviation(Pair p) {
    const auto rotated = rotated_configuration(p, pi / 2);
    const auto dual = edge_tangent_lines(dual_solid(p));
    double worst = 0.0;
    for (const auto& line : rotated) {
        double best = 1e100;
        for (const auto& cand : dual) {
            const double dev = line.tangency.dist(cand.tangency) +
                               std::fabs(std::fabs(line.direction.dot(cand.direction)) - 1.0);
            best = std::min(best, dev);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

int cmd_verify() {
    Verifier v;

    // Distance / radius conversion.
    v.add("radius_from_distance(1)", 1.0, radius_from_distance(1.0), 0.0);
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double d = 2.0 * i / 1000.0;
            worst = std::max(worst, std::fabs(distance_from_radius(radius_from_distance(d)) - d));
        }
        v.add("conversion round trip, max over grid", 0.0, worst, 1e-12);
    }

    // Solid normalization and rotation groups.
    const double h_ref[5] = {std::sqrt(3.0), std::sqrt(2.0), std::sqrt(1.5),
                             std::pow(5.0, 0.25) / std::sqrt(kTau), std::sqrt(3.0) / kTau};
    const SolidName names[5] = {SolidName::tetrahedron, SolidName::octahedron, SolidName::cube,
                                SolidName::icosahedron, SolidName::dodecahedron};
    const char* solid_tag[5] = {"tetrahedron", "octahedron", "cube", "icosahedron",
                                "dodecahedron"};
    for (int i = 0; i < 5; ++i)
        v.add(fmt("circumradius h, %s", solid_tag[i]), h_ref[i], build_solid(names[i]).h, 1e-12);

    const Pair pairs[3] = {Pair::T, Pair::O, Pair::I};
    const int group_ref[3] = {12, 24, 60};
    const int orbit_ref[3] = {2, 5, 11};
    const int total_ref[3] = {15, 66, 435};
    for (int i = 0; i < 3; ++i) {
        const auto& ctx = context(pairs[i]);
        v.add(fmt("rotation group order, pair %s", pair_name(pairs[i])), group_ref[i],
              static_cast<double>(ctx.group.elements.size()), 0.0);
        v.add(fmt("edge-pair orbit count, pair %s", pair_name(pairs[i])), orbit_ref[i],
              static_cast<double>(ctx.orbits.orbits.size()), 0.0);
        std::size_t total = 0;
        for (const auto& orb : ctx.orbits.orbits) total += orb.members.size();
        v.add(fmt("edge-pair total, pair %s", pair_name(pairs[i])), total_ref[i],
              static_cast<double>(total), 0.0);
    }

    // Tetrahedron family: the adjacent branch peaks at exactly 1.
    {
        const auto& ctx = context(Pair::T);
        const auto best = maximize_branch(Pair::T, ctx.orbits.neighboring_label);
        v.add("pair T adjacent branch, argmax", pi / 4, best.delta, 1e-9);
        v.add("pair T adjacent branch, max", 1.0, best.d_sq, 1e-12);
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double delta = (pi / 2) * i / 100.0;
            const double general =
                neighbor_distance_sq_general(1.0 / std::sqrt(3.0), pi / 3, std::tan(delta));
            worst = std::max(
                worst,
                std::fabs(general - branch_distance_sq(Pair::T, ctx.orbits.neighboring_label,
                                                       delta)));
        }
        v.add("general neighbor formula vs pair T branch", 0.0, worst, 1e-10);
    }

    // Octahedron neighboring maximum and its corner.
    {
        const auto& ctx = context(Pair::O);
        const auto best = maximize_branch(Pair::O, ctx.orbits.neighboring_label);
        v.add("delta_O = arctan(3^(1/4)/sqrt 2)", std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0)),
              best.delta, 1e-10);
        v.add("delta_O / pi", 0.23856, best.delta / pi, 5e-6);
        v.add("min^2 at delta_O = 2 - sqrt 3", 2.0 - std::sqrt(3.0), best.d_sq, 1e-12);
        const double r_o = 7.0 - 5.0 * std::sqrt(2.0) - 4.0 * std::sqrt(3.0) + 3.0 * std::sqrt(6.0);
        v.add("radius at delta_O, exact surd", r_o, radius_from_distance(std::sqrt(best.d_sq)),
              1e-12);
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double delta = (pi / 2) * i / 100.0;
            const double general =
                neighbor_distance_sq_general(1.0 / std::sqrt(2.0), pi / 4, std::tan(delta));
            worst = std::max(worst, std::fabs(general - closed_form_branch(
                                                            Pair::O, FormId::o_neighbor, delta)));
        }
        v.add("general neighbor formula vs pair O closed form", 0.0, worst, 1e-12);

        const auto catalog = critical_catalog(Pair::O);
        const CriticalPoint* corner = nullptr;
        for (const auto& cp : catalog)
            if (cp.kind == CriticalKind::corner && !cp.local_max && !corner) corner = &cp;
        if (corner) {
            v.add("pair O first corner, delta", 0.800811, corner->delta, 1e-5);
            v.add("pair O first corner, min^2", 0.26534, corner->d_sq, 1e-4);
        } else {
            v.add("pair O first corner found", 1.0, 0.0, 0.0);
        }
        int zeros = 0;
        for (const auto& cp : catalog)
            if (cp.kind == CriticalKind::zero) {
                ++zeros;
                v.add("pair O zero at arctan sqrt 2", std::atan(std::sqrt(2.0)), cp.delta, 1e-9);
            }
        v.add("pair O interior zero count", 1.0, zeros, 0.0);
        int maxima = 0;
        for (const auto& cp : catalog) maxima += cp.local_max ? 1 : 0;
        v.add("pair O local maxima of min curve", 2.0, maxima, 0.0);
    }

    // Icosahedron neighboring maximum, the true minimum there, and the
    // global maximum of the min curve.
    {
        const auto& ctx = context(Pair::I);
        const auto best = maximize_branch(Pair::I, ctx.orbits.neighboring_label);
        v.add("tan delta_I = (6/(5+sqrt 5))^(1/4)",
              std::atan(std::pow(6.0 / (5.0 + std::sqrt(5.0)), 0.25)), best.delta, 1e-12);
        const double d_i_sq = (9.0 - std::sqrt(5.0) - std::sqrt(6.0 * (5.0 + std::sqrt(5.0)))) / 4.0;
        v.add("neighboring max at delta_I, exact surd", d_i_sq, best.d_sq, 1e-12);
        v.add("neighboring max at delta_I, decimal", 0.0437, best.d_sq, 5e-4);
        const double r_i = 11.0 - 5.0 * std::sqrt(5.0) +
                           std::sqrt(3.0 * (85.0 - 38.0 * std::sqrt(5.0)));
        v.add("touching radius at delta_I, exact surd", r_i,
              radius_from_distance(std::sqrt(best.d_sq)), 1e-12);
        const auto at_di = min_distance_sq(Pair::I, best.delta);
        v.add("pair I min^2 at delta_I", 0.00291762, at_di.d_sq, 1e-7);
        v.add("pair I radius at delta_I", 0.0277571,
              radius_from_distance(std::sqrt(at_di.d_sq)), 1e-6);

        const Polynomial sextic{{9.0, -84.0, -4.0, 190.0, 0.0, -80.0, 5.0}};
        const auto roots = real_roots(sextic, -2.0, 16.0);
        v.add("sextic real root count", 6.0, static_cast<double>(roots.size()), 0.0);
        double t0 = 0.0;
        for (double r : roots)
            if (std::fabs(r - 0.694356) < std::fabs(t0 - 0.694356)) t0 = r;
        v.add("sextic root t0", 0.694356, t0, 1e-5);
        v.add("sextic residual at t0", 0.0, std::fabs(sextic(t0)), 1e-9);
        const double delta_max = std::atan(std::sqrt(t0));
        v.add("delta_max = arctan sqrt t0", 0.694707, delta_max, 1e-5);
        const auto at_max = min_distance_sq(Pair::I, delta_max);
        v.add("pair I min^2 at delta_max", 0.0429216, at_max.d_sq, 1e-6);
        v.add("r_max", 0.115558, radius_from_distance(std::sqrt(at_max.d_sq)), 1e-5);

        const auto catalog = critical_catalog(Pair::I);
        std::vector<double> zeros;
        for (const auto& cp : catalog)
            if (cp.kind == CriticalKind::zero) zeros.push_back(cp.delta);
        v.add("pair I interior zero count", 3.0, static_cast<double>(zeros.size()), 0.0);
        if (zeros.size() == 3) {
            v.add("pair I zero 1 = arctan(2/sqrt 5)/2", 0.5 * std::atan(2.0 / std::sqrt(5.0)),
                  zeros[0], 1e-9);
            v.add("pair I zero 2 = pi/4", pi / 4, zeros[1], 1e-9);
            v.add("pair I zero 3 = arctan tau", std::atan(kTau), zeros[2], 1e-9);
        }
        int maxima = 0;
        for (const auto& cp : catalog) maxima += cp.local_max ? 1 : 0;
        v.add("pair I local maxima of min curve", 4.0, maxima, 0.0);
        const CriticalPoint* illusive = nullptr;
        for (const auto& cp : catalog)
            if (cp.delta > 0.874 && cp.delta < 0.876 && cp.kind == CriticalKind::corner)
                illusive = &cp;
        v.add("pair I corner in [0.874, 0.876] found", 1.0, illusive ? 1.0 : 0.0, 0.0);
        if (illusive) v.add("that corner is not a local max", 0.0, illusive->local_max, 0.0);
    }
    {
        const auto catalog = critical_catalog(Pair::T);
        int maxima = 0;
        for (const auto& cp : catalog) maxima += cp.local_max ? 1 : 0;
        v.add("pair T local maxima of min curve", 1.0, maxima, 0.0);
    }

    // Closed-form branches: each matches exactly one orbit branch, and the
    // two branches with the common root vanish together at (pi - arctan 2)/2.
    {
        const FormId forms[7] = {FormId::o_neighbor, FormId::o_green, FormId::i_neighbor,
                                 FormId::i_3,        FormId::i_5,     FormId::i_8,
                                 FormId::i_9};
        for (FormId f : forms) {
            const Pair p = form_pair(f);
            const int label = orbit_label_for_form(f);
            double worst = 0.0;
            for (int i = 1; i < 64; ++i) {
                const double delta = (pi / 2) * i / 64.0;
                worst = std::max(worst, std::fabs(closed_form_branch(p, f, delta) -
                                                  branch_distance_sq(p, label, delta)));
            }
            v.add(fmt("closed form %s vs orbit branch %d", form_id_name(f), label), 0.0, worst,
                  1e-10);
        }
        const double common = (pi - std::atan(2.0)) / 2.0;
        v.add("brown branch at (pi - arctan 2)/2", 0.0,
              closed_form_branch(Pair::I, FormId::i_8, common), 1e-12);
        v.add("dashed branch at (pi - arctan 2)/2", 0.0,
              closed_form_branch(Pair::I, FormId::i_9, common), 1e-12);
    }

    // Orbit decomposition against brute force at a few deltas.
    for (Pair p : pairs) {
        double worst = 0.0;
        for (int i = 1; i <= 7; ++i) {
            const double delta = (pi / 2) * i / 8.0;
            const double direct = configuration_min_distance(rotated_configuration(p, delta));
            worst = std::max(worst, std::fabs(direct * direct - min_distance_sq(p, delta).d_sq));
        }
        v.add(fmt("orbit min vs direct min, pair %s", pair_name(p)), 0.0, worst, 1e-10);
    }

    // Compound structures at the interior zeros.
    {
        const auto lines = rotated_configuration(Pair::O, std::atan(std::sqrt(2.0)));
        const auto comp = extract_compound(lines);
        v.add("pair O zero: component count", 4.0, static_cast<double>(comp.components.size()),
              0.0);
        double edge = 0.0;
        bool triangles = true;
        for (const auto& c : comp.components) {
            triangles = triangles && c.shape == ComponentShape::triangle;
            edge = c.cycle[0].dist(c.cycle[1]);
        }
        v.add("pair O zero: all triangles", 1.0, triangles ? 1.0 : 0.0, 0.0);
        v.add("pair O zero: triangle edge 2 sqrt 3", 2.0 * std::sqrt(3.0), edge, 1e-9);
        const auto stats = vertex_stats(comp.vertices);
        v.add("pair O zero: vertex count", 12.0, stats.vertex_count, 0.0);
        v.add("pair O zero: vertex min pairwise", 2.0, stats.min_pairwise, 1e-9);
        double link_dev = 0.0;
        for (std::size_t i = 0; i < comp.components.size(); ++i)
            for (std::size_t j = i + 1; j < comp.components.size(); ++j)
                link_dev = std::max(
                    link_dev, std::fabs(std::abs(linking_number(comp.components[i].cycle,
                                                               comp.components[j].cycle)) -
                                        1.0));
        v.add("pair O zero: pairwise |lk| all 1", 0.0, link_dev, 0.0);
        std::vector<Vec3> dirs;
        for (const auto& vert : comp.vertices) dirs.push_back(vert.normalized());
        v.add("ball radius, cuboctahedron directions", 1.0, id_ball_radius(dirs), 1e-12);
    }
    {
        const auto lines =
            rotated_configuration(Pair::I, 0.5 * std::atan(2.0 / std::sqrt(5.0)));
        const auto comp = extract_compound(lines);
        v.add("pair I zero 1: component count", 10.0,
              static_cast<double>(comp.components.size()), 0.0);
        v.add("pair I zero 1: triangle edge 2 sqrt 3", 2.0 * std::sqrt(3.0),
              comp.components[0].cycle[0].dist(comp.components[0].cycle[1]), 1e-9);
        const auto stats = vertex_stats(comp.vertices);
        v.add("pair I zero 1: vertex count", 30.0, stats.vertex_count, 0.0);
        v.add("pair I zero 1: vertex min pairwise", std::sqrt(5.0) - 1.0, stats.min_pairwise,
              1e-9);
        std::vector<Vec3> dirs;
        for (const auto& vert : comp.vertices) dirs.push_back(vert.normalized());
        v.add("ball radius, icosidodecahedron directions", 1.0 / std::sqrt(5.0),
              id_ball_radius(dirs), 1e-12);
    }
    {
        const auto comp = extract_compound(rotated_configuration(Pair::I, pi / 4));
        v.add("pair I zero 2: component count", 5.0,
              static_cast<double>(comp.components.size()), 0.0);
        bool skeletons = true;
        for (const auto& c : comp.components)
            skeletons = skeletons && c.shape == ComponentShape::skeleton;
        v.add("pair I zero 2: all tetrahedron skeletons", 1.0, skeletons ? 1.0 : 0.0, 0.0);
        v.add("pair I zero 2: skeleton edge 2 sqrt 2", 2.0 * std::sqrt(2.0),
              comp.components[0].cycle[0].dist(comp.components[0].cycle[1]), 1e-9);
    }
    {
        const auto comp = extract_compound(rotated_configuration(Pair::I, std::atan(kTau)));
        v.add("pair I zero 3: component count", 6.0,
              static_cast<double>(comp.components.size()), 0.0);
        bool stars = true;
        for (const auto& c : comp.components) stars = stars && c.shape == ComponentShape::star;
        v.add("pair I zero 3: all pentagonal stars", 1.0, stars ? 1.0 : 0.0, 0.0);
        const auto pentagons = star_inner_pentagons(comp);
        double link_dev = 0.0;
        for (std::size_t i = 0; i < pentagons.size(); ++i)
            for (std::size_t j = i + 1; j < pentagons.size(); ++j)
                link_dev = std::max(
                    link_dev,
                    std::fabs(std::abs(linking_number(pentagons[i], pentagons[j])) - 1.0));
        v.add("pair I zero 3: inner pentagon |lk| all 1", 0.0, link_dev, 0.0);
    }

    // Field identity between the touching radius and the squared distance.
    v.add("cubic identity deviation", 0.0, radii_identity_check().deviation, 1e-12);

    // At pi/2 every configuration lands on the dual solid's edge lines.
    for (Pair p : pairs)
        v.add(fmt("duality at pi/2, pair %s", pair_name(p)), 0.0, duality_deviation(p), 1e-9);

    return v.report();
}

// ---------------------------------------------------------------------------
// curve

int cmd_curve(const std::string& pair_str, int samples, const std::string& out_path) {
    const Pair p = parse_pair(pair_str);
    if (out_path.empty()) {
        write_curve_csv(std::cout, p, samples);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 1;
    }
    write_curve_csv(out, p, samples);
    if (!out.good()) {
        std::cerr << "write failed for " << out_path << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// critical

int cmd_critical(const std::string& pair_str, bool degrees) {
    const Pair p = parse_pair(pair_str);
    const auto catalog = critical_catalog(p);
    const double scale = degrees ? 180.0 / pi : 1.0;
    std::printf("critical points of the minimum-distance curve, pair %s%s\n", pair_name(p),
                degrees ? " (angles in degrees)" : "");
    std::printf("%-22s %-22s %-22s %-22s %-22s %-11s %-9s %s\n", "delta", "tan(delta)", "min^2",
                "min", "radius", "kind", "local_max", "active");
    for (const auto& cp : catalog) {
        std::printf("%-22s %-22s %-22s %-22s %-22s %-11s %-9s %s\n",
                    format_angle(cp.delta * scale).c_str(),
                    format_angle(std::tan(cp.delta)).c_str(), format_angle(cp.d_sq).c_str(),
                    format_angle(std::sqrt(cp.d_sq)).c_str(), format_angle(cp.radius).c_str(),
                    critical_kind_name(cp.kind), cp.local_max ? "yes" : "no",
                    join_labels(cp.active).c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// orbits

int cmd_orbits(const std::string& pair_str) {
    const Pair p = parse_pair(pair_str);
    const auto& ctx = context(p);

    std::map<int, std::string> notes;
    if (ctx.orbits.opposite_label >= 0)
        notes[ctx.orbits.opposite_label] = "opposite (constant 4)";
    if (ctx.orbits.neighboring_label >= 0) {
        auto& s = notes[ctx.orbits.neighboring_label];
        s += s.empty() ? "neighboring" : ", neighboring";
    }
    const FormId forms[7] = {FormId::o_neighbor, FormId::o_green, FormId::i_neighbor,
                             FormId::i_3,        FormId::i_5,     FormId::i_8,
                             FormId::i_9};
    for (FormId f : forms) {
        if (form_pair(f) != p) continue;
        auto& s = notes[orbit_label_for_form(f)];
        if (!s.empty()) s += ", ";
        s += fmt("closed form %s", form_id_name(f));
    }

    std::printf("edge-pair orbits, pair %s (%zu orbits)\n", pair_name(p),
                ctx.orbits.orbits.size());
    std::printf("%-6s %-6s %-16s %-24s %s\n", "label", "size", "representative", "d^2(0.1)",
                "notes");
    for (const auto& orb : ctx.orbits.orbits) {
        const double probe = branch_distance_sq(p, orb.label, 0.1);
        const auto it = notes.find(orb.label);
        std::printf("%-6d %-6zu (%d, %d)%*s %-24s %s\n", orb.label, orb.members.size(),
                    orb.representative.first, orb.representative.second,
                    static_cast<int>(8 - std::to_string(orb.representative.first).size() -
                                     std::to_string(orb.representative.second).size()),
                    "", format_full(probe).c_str(), it == notes.end() ? "" : it->second.c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// compound

int cmd_compound(const std::string& pair_str, const std::string& delta_spec,
                 const std::string& radius_spec, const std::string& format, double length,
                 bool sphere, bool force) {
    const Pair p = parse_pair(pair_str);
    const double delta = parse_delta_spec(p, delta_spec);
    const double radius = parse_radius_spec(p, delta, radius_spec);
    const auto lines = rotated_configuration(p, delta);

    if (delta < 0.0 || delta > pi / 2)
        std::cerr << "note: delta " << format_full(delta) << " lies outside [0, pi/2]\n";

    const double touch = touching_radius(p, delta);
    if (radius > touch + 1e-12) {
        if (!force) {
            std::cerr << "radius " << format_full(radius) << " exceeds the touching radius "
                      << format_full(touch) << "; the cylinders would overlap"
                      << " (pass --force to export anyway)\n";
            return 1;
        }
        std::cerr << "warning: radius " << format_full(radius)
                  << " exceeds the touching radius " << format_full(touch) << "\n";
    }

    if (format == "json") {
        write_lines_json(std::cout, p, delta, radius, lines);
    } else if (format == "csv") {
        write_lines_csv(std::cout, lines);
    } else {
        write_cylinders_obj(std::cout, lines, radius, length, sphere);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// minima

void print_vertex_stats(const char* tag, const std::vector<Vec3>& pts) {
    const auto stats = vertex_stats(pts);
    std::printf("%s: %d, circumradius %s, min pairwise distance %s, ", tag,
                stats.vertex_count, format_angle(stats.circumradius).c_str(),
                format_angle(stats.min_pairwise).c_str());
    if (stats.nearest_neighbor_count >= 0)
        std::printf("%d nearest neighbors per vertex\n", stats.nearest_neighbor_count);
    else
        std::printf("non-uniform nearest-neighbor count\n");
}

// Smallest and largest consecutive-corner distance over all component cycles.
std::pair<double, double> cycle_edge_range(const Compound& comp) {
    double lo = 1e100, hi = 0.0;
    for (const auto& c : comp.components) {
        const std::size_t n = c.cycle.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double e = c.cycle[i].dist(c.cycle[(i + 1) % n]);
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    return {lo, hi};
}

// All pairwise |lk| values over a family of closed loops; returns the set of
// distinct absolute values (should be a single value for these compounds).
std::vector<int> pairwise_abs_link(const std::vector<std::vector<Vec3>>& loops) {
    std::vector<int> values;
    for (std::size_t i = 0; i < loops.size(); ++i)
        for (std::size_t j = i + 1; j < loops.size(); ++j) {
            const int lk = std::abs(linking_number(loops[i], loops[j]));
            if (std::find(values.begin(), values.end(), lk) == values.end())
                values.push_back(lk);
        }
    std::sort(values.begin(), values.end());
    return values;
}

int cmd_minima(const std::string& pair_str, int which, bool degrees) {
    const Pair p = parse_pair(pair_str);
    const int zero_count = p == Pair::T ? 0 : (p == Pair::O ? 1 : 3);
    if (zero_count == 0)
        throw std::invalid_argument(
            "pair T has no interior zeros: its minimum curve vanishes only at the endpoints");
    if (which < 1 || which > zero_count)
        throw std::invalid_argument(fmt("pair %s has %d interior zero%s; --which must be in [1, %d]",
                                        pair_name(p), zero_count, zero_count == 1 ? "" : "s",
                                        zero_count));

    const double delta = parse_delta_spec(p, fmt("min-%d", which));
    const double scale = degrees ? 180.0 / pi : 1.0;
    std::printf("pair %s, interior zero %d of %d, delta = %s%s\n", pair_name(p), which,
                zero_count, format_angle(delta * scale).c_str(), degrees ? " deg" : "");

    const auto lines = rotated_configuration(p, delta);
    const auto comp = extract_compound(lines);
    std::printf("components: %zu x %s (%zu lines each)\n", comp.components.size(),
                shape_name(comp.components[0].shape), comp.components[0].line_indices.size());

    const auto [edge_lo, edge_hi] = cycle_edge_range(comp);
    const ComponentShape shape = comp.components[0].shape;
    if (shape == ComponentShape::skeleton) {
        // Cycle holds the four frame vertices; every pair is an edge.
        double lo = 1e100, hi = 0.0;
        for (const auto& c : comp.components)
            for (std::size_t i = 0; i < c.cycle.size(); ++i)
                for (std::size_t j = i + 1; j < c.cycle.size(); ++j) {
                    const double e = c.cycle[i].dist(c.cycle[j]);
                    lo = std::min(lo, e);
                    hi = std::max(hi, e);
                }
        std::printf("skeleton edge length: %s (spread %.2e)\n", format_angle(lo).c_str(),
                    hi - lo);
    } else {
        std::printf("%s edge length: %s (spread %.2e)\n",
                    shape == ComponentShape::triangle ? "triangle" : "star",
                    format_angle(edge_lo).c_str(), edge_hi - edge_lo);
    }

    print_vertex_stats("vertices", comp.vertices);

    if (shape == ComponentShape::triangle) {
        std::vector<std::vector<Vec3>> loops;
        for (const auto& c : comp.components) loops.push_back(c.cycle);
        const auto values = pairwise_abs_link(loops);
        std::printf("pairwise triangle |lk| values: %s (%zu pairs)\n",
                    join_labels(values).c_str(), loops.size() * (loops.size() - 1) / 2);
    } else if (shape == ComponentShape::star) {
        std::vector<std::vector<Vec3>> outer;
        for (const auto& c : comp.components) outer.push_back(c.cycle);
        const auto star_values = pairwise_abs_link(outer);
        std::printf("pairwise star-cycle |lk| values: %s\n", join_labels(star_values).c_str());
        const auto pentagons = star_inner_pentagons(comp);
        const auto penta_values = pairwise_abs_link(pentagons);
        std::printf("pairwise inner-pentagon |lk| values: %s (%zu pentagons)\n",
                    join_labels(penta_values).c_str(), pentagons.size());
        double inner_lo = 1e100, inner_hi = 0.0;
        for (const auto& pentagon : pentagons)
            for (std::size_t i = 0; i < pentagon.size(); ++i) {
                const double e = pentagon[i].dist(pentagon[(i + 1) % pentagon.size()]);
                inner_lo = std::min(inner_lo, e);
                inner_hi = std::max(inner_hi, e);
            }
        std::printf("inner pentagon edge length: %s (spread %.2e)\n",
                    format_angle(inner_lo).c_str(), inner_hi - inner_lo);
    } else {
        std::printf("linking numbers: not applicable (skeletons are not closed curves)\n");
    }

    const bool axial = axial_generation_check(p, comp);
    if (shape == ComponentShape::skeleton)
        std::printf("axial generation from one component: %s (skeleton frames are not planar)\n",
                    axial ? "yes" : "no");
    else
        std::printf("axial generation from one component: %s\n", axial ? "yes" : "no");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotating tangent-line configurations of Platonic solids into cylinder compounds"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Recompute the reference constants and report");

    std::string curve_pair, curve_out;
    int curve_samples = 0;
    auto* curve = app.add_subcommand("curve", "Sample the minimum-distance curve as CSV");
    curve->add_option("--pair", curve_pair, "Solid pair: T, O or I")->required();
    curve->add_option("--samples", curve_samples, "Sample count on [0, pi/2]")
        ->required()
        ->check(CLI::Range(2, 10000000));
    curve->add_option("--out", curve_out, "Output path (default: stdout)");

    std::string critical_pair;
    bool critical_degrees = false;
    auto* critical = app.add_subcommand("critical", "List critical points of the minimum curve");
    critical->add_option("--pair", critical_pair, "Solid pair: T, O or I")->required();
    critical->add_flag("--degrees", critical_degrees, "Print angles in degrees");

    std::string orbits_pair;
    auto* orbits = app.add_subcommand("orbits", "List edge-pair orbits and their branches");
    orbits->add_option("--pair", orbits_pair, "Solid pair: T, O or I")->required();

    std::string comp_pair, comp_delta, comp_radius, comp_format;
    double comp_length = 10.0;
    bool comp_sphere = false, comp_force = false;
    auto* compound = app.add_subcommand("compound", "Export the rotated configuration");
    compound->add_option("--pair", comp_pair, "Solid pair: T, O or I")->required();
    compound
        ->add_option("--delta", comp_delta,
                     "Rotation angle: number, delta-max, min-1, min-2, min-3 or o6")
        ->required();
    compound->add_option("--radius", comp_radius, "Cylinder radius: number or auto")->required();
    compound->add_option("--format", comp_format, "Output format")
        ->required()
        ->check(CLI::IsMember({"json", "obj", "csv"}));
    compound->add_option("--length", comp_length, "Cylinder half-length for obj output")
        ->check(CLI::PositiveNumber);
    compound->add_flag("--sphere", comp_sphere, "Append a unit sphere mesh to obj output");
    compound->add_flag("--force", comp_force, "Export even when cylinders overlap");

    std::string minima_pair;
    int minima_which = 1;
    bool minima_degrees = false;
    auto* minima = app.add_subcommand("minima", "Describe the compound at an interior zero");
    minima->add_option("--pair", minima_pair, "Solid pair: T, O or I")->required();
    minima->add_option("--which", minima_which, "Zero index, 1-based in increasing delta")
        ->required();
    minima->add_flag("--degrees", minima_degrees, "Print angles in degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify();
        if (*curve) return cmd_curve(curve_pair, curve_samples, curve_out);
        if (*critical) return cmd_critical(critical_pair, critical_degrees);
        if (*orbits) return cmd_orbits(orbits_pair);
        if (*compound)
            return cmd_compound(comp_pair, comp_delta, comp_radius, comp_format, comp_length,
                                comp_sphere, comp_force);
        if (*minima) return cmd_minima(minima_pair, minima_which, minima_degrees);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
