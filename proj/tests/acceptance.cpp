// Acceptance suite: sixteen end-to-end checks of the library against its
// reference constants. Prints one line per criterion and exits nonzero when
// any of them fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "cyl/compounds.hpp"
#include "cyl/criticality.hpp"
#include "cyl/exports.hpp"
#include "cyl/geom.hpp"
#include "cyl/platonic.hpp"
#include "cyl/rotation.hpp"

using namespace cyl;

namespace {

int failures = 0;

void criterion(int n, const char* text, bool ok) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", n, text);
    if (!ok) ++failures;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

double tetra_neighbor_sq(double delta) {
    const double t2 = std::tan(delta) * std::tan(delta);
    return 16.0 * t2 / ((3.0 * t2 + 1.0) * (t2 + 3.0));
}

double duality_deviation(Pair p) {
    const auto rotated = rotated_configuration(p, pi / 2);
    const auto dual = edge_tangent_lines(dual_solid(p));
    double worst = 0.0;
    for (const auto& line : rotated) {
        double best = 1e100;
        for (const auto& cand : dual)
            best = std::min(best,
                            line.tangency.dist(cand.tangency) +
                                std::fabs(std::fabs(line.direction.dot(cand.direction)) - 1.0));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

int main() {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;

    // 1. Distance-to-radius conversion and its inverse.
    {
        bool ok = radius_from_distance(1.0) == 1.0;
        for (int i = 0; i < 1000; ++i) {
            const double d = 2.0 * i / 1000.0;
            ok = ok && near(distance_from_radius(radius_from_distance(d)), d, 1e-12);
        }
        criterion(1, "conversion fixes 1 and round-trips on a 1000-point grid", ok);
    }

    // 2. Tetrahedron family: peak exactly 1 at pi/4, branch matches the
    // closed form.
    {
        const int label = context(Pair::T).orbits.neighboring_label;
        const auto m = maximize_branch(Pair::T, label);
        bool ok = !m.at_endpoint && near(m.d_sq, 1.0, 1e-12) && near(m.delta, pi / 4, 1e-9);
        for (int i = 0; i <= 100; ++i) {
            const double delta = (pi / 2) * i / 100.0;
            ok = ok && near(branch_distance_sq(Pair::T, label, delta), tetra_neighbor_sq(delta), 1e-10);
        }
        criterion(2, "tetrahedron adjacent branch peaks at 1 for delta = pi/4", ok);
    }

    // 3. The general neighboring formula reduces to the octahedron and
    // tetrahedron closed forms.
    {
        bool ok = true;
        for (int i = 0; i <= 100; ++i) {
            const double delta = (pi / 2) * i / 100.0;
            const double t = std::tan(delta);
            ok = ok && near(neighbor_distance_sq_general(1.0 / std::sqrt(2.0), pi / 4, t),
                            closed_form_branch(Pair::O, FormId::o_neighbor, delta), 1e-12);
            ok = ok && near(neighbor_distance_sq_general(1.0 / std::sqrt(3.0), pi / 3, t),
                            tetra_neighbor_sq(delta), 1e-12);
        }
        criterion(3, "general neighbor formula reduces to both special cases", ok);
    }

    // 4. Octahedron neighboring maximum: position, value, radius.
    {
        const auto m = maximize_branch(Pair::O, context(Pair::O).orbits.neighboring_label);
        const double r = radius_from_distance(std::sqrt(m.d_sq));
        const bool ok =
            near(m.delta, std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0)), 1e-10) &&
            near(m.delta / pi, 0.23856, 5e-6) && near(m.d_sq, 2.0 - std::sqrt(3.0), 1e-12) &&
            near(r, 7.0 - 5.0 * std::sqrt(2.0) - 4.0 * std::sqrt(3.0) + 3.0 * std::sqrt(6.0),
                 1e-12) &&
            near(r, 0.3492, 5e-5);
        criterion(4, "octahedron maximum at arctan(3^(1/4)/sqrt 2) with its surd radius", ok);
    }

    // 5. At the octahedron maximum every other branch stays strictly higher.
    {
        const auto& ctx = context(Pair::O);
        const double delta_o = std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0));
        bool ok = true;
        for (const auto& orbit : ctx.orbits.orbits) {
            if (orbit.label == ctx.orbits.neighboring_label) continue;
            ok = ok && branch_distance_sq(Pair::O, orbit.label, delta_o) >
                           2.0 - std::sqrt(3.0) + 1e-9;
        }
        criterion(5, "all non-neighboring octahedron branches exceed 2 - sqrt 3 there", ok);
    }

    // 6. The first octahedron corner.
    {
        bool ok = false;
        for (const auto& cp : critical_catalog(Pair::O))
            if (cp.kind == CriticalKind::corner && near(cp.delta, 0.800811, 1e-5) &&
                near(cp.d_sq, 0.26534, 1e-4))
                ok = true;
        criterion(6, "octahedron corner near delta 0.800811 with min^2 0.26534", ok);
    }

    // 7. Icosahedron neighboring maximum: tangent, value, radius.
    {
        const auto m = maximize_branch(Pair::I, context(Pair::I).orbits.neighboring_label);
        const double d_sq =
            (9.0 - std::sqrt(5.0) - std::sqrt(6.0 * (5.0 + std::sqrt(5.0)))) / 4.0;
        const double r_i =
            11.0 - 5.0 * std::sqrt(5.0) + std::sqrt(3.0 * (85.0 - 38.0 * std::sqrt(5.0)));
        const bool ok =
            near(std::tan(m.delta), std::pow(6.0 / (5.0 + std::sqrt(5.0)), 0.25), 1e-12) &&
            near(m.d_sq, d_sq, 1e-12) && near(m.d_sq, 0.0437, 5e-4) &&
            near(radius_from_distance(std::sqrt(m.d_sq)), r_i, 1e-12);
        criterion(7, "icosahedron neighboring maximum matches its surds", ok);
    }

    // 8. The icosahedron min curve dips below the neighboring branch at its
    // maximum.
    {
        const auto m = maximize_branch(Pair::I, context(Pair::I).orbits.neighboring_label);
        const double min_sq = min_distance_sq(Pair::I, m.delta).d_sq;
        const bool ok = near(min_sq, 0.00291762, 1e-7) &&
                        near(radius_from_distance(std::sqrt(min_sq)), 0.0277571, 1e-6);
        criterion(8, "true icosahedron minimum at that angle is 0.00291762", ok);
    }

    // 9. The degree-6 polynomial behind the icosahedron global maximum.
    {
        const Polynomial sextic{{9.0, -84.0, -4.0, 190.0, 0.0, -80.0, 5.0}};
        const auto roots = real_roots(sextic, -2.0, 16.0);
        bool ok = roots.size() == 6;
        double t0 = 1e100;
        for (double r : roots)
            if (std::fabs(r - 0.694356) < std::fabs(t0 - 0.694356)) t0 = r;
        ok = ok && near(t0, 0.694356, 1e-5) && std::fabs(sextic(t0)) < 1e-9;
        const double delta_max = std::atan(std::sqrt(t0));
        ok = ok && near(delta_max, 0.694707, 1e-5);
        const double min_sq = min_distance_sq(Pair::I, delta_max).d_sq;
        ok = ok && near(min_sq, 0.0429216, 1e-6);
        ok = ok && near(radius_from_distance(std::sqrt(min_sq)), 0.115558, 1e-5);
        criterion(9, "six real roots; the relevant one gives the global maximum", ok);
    }

    // 10. Every closed-form branch matches exactly one orbit branch; the two
    // icosahedron forms with a common root vanish together.
    {
        const FormId forms[] = {FormId::o_neighbor, FormId::o_green, FormId::i_neighbor,
                                FormId::i_3,        FormId::i_5,     FormId::i_8,
                                FormId::i_9};
        bool ok = true;
        for (FormId f : forms) {
            const Pair p = form_pair(f);
            int label = -1;
            try {
                label = orbit_label_for_form(f);  // throws unless exactly one match
            } catch (const std::exception&) {
                ok = false;
                continue;
            }
            for (int i = 0; i <= 256; ++i) {
                const double delta = (pi / 2) * i / 256.0;
                ok = ok && near(closed_form_branch(p, f, delta),
                                branch_distance_sq(p, label, delta), 1e-10);
            }
        }
        const double common = (pi - std::atan(2.0)) / 2.0;
        ok = ok && std::fabs(closed_form_branch(Pair::I, FormId::i_8, common)) < 1e-12;
        ok = ok && std::fabs(closed_form_branch(Pair::I, FormId::i_9, common)) < 1e-12;
        criterion(10, "closed forms match single orbit branches; common root checks out", ok);
    }

    // 11. Orbit structure and the orbit/brute-force equivalence.
    {
        bool ok = true;
        const Pair pairs[] = {Pair::T, Pair::O, Pair::I};
        const std::size_t counts[] = {2, 5, 11};
        const std::size_t totals[] = {15, 66, 435};
        for (int t = 0; t < 3; ++t) {
            const auto& table = context(pairs[t]).orbits;
            ok = ok && table.orbits.size() == counts[t];
            std::size_t total = 0;
            for (const auto& orbit : table.orbits) total += orbit.members.size();
            ok = ok && total == totals[t];
        }
        ok = ok && context(Pair::O).orbits.opposite_label >= 0;
        ok = ok && context(Pair::I).orbits.opposite_label >= 0;
        for (Pair p : pairs) {
            const int opp = context(p).orbits.opposite_label;
            if (opp < 0) continue;
            for (double delta : {0.2, 0.9, 1.4})
                ok = ok && near(branch_distance_sq(p, opp, delta), 4.0, 1e-12);
        }

        std::mt19937 rng(271828);
        std::uniform_real_distribution<double> dist(0.0, pi / 2);
        for (Pair p : pairs)
            for (int k = 0; k < 50; ++k) {
                const double delta = dist(rng);
                const double direct =
                    configuration_min_distance(rotated_configuration(p, delta));
                ok = ok && near(min_distance_sq(p, delta).d_sq, direct * direct, 1e-10);
            }
        criterion(11, "orbit counts 2/5/11, totals 15/66/435, min matches brute force", ok);
    }

    // 12. Local maxima of the min curves, and the near-peak that is not one.
    {
        const Pair pairs[] = {Pair::T, Pair::O, Pair::I};
        const int expected[] = {1, 2, 4};
        bool ok = true;
        for (int t = 0; t < 3; ++t) {
            int maxima = 0;
            for (const auto& cp : critical_catalog(pairs[t])) maxima += cp.local_max ? 1 : 0;
            ok = ok && maxima == expected[t];
        }
        bool found = false;
        for (const auto& cp : critical_catalog(Pair::I))
            if (cp.kind == CriticalKind::corner && cp.delta > 0.874 && cp.delta < 0.876 &&
                !cp.local_max)
                found = true;
        ok = ok && found;
        criterion(12,
                  "min curves have 1/2/4 local maxima; a corner in [0.874, 0.876] is not one",
                  ok);
    }

    // 13. The compounds at the interior zeros.
    {
        bool ok = true;

        const auto o_comp =
            extract_compound(rotated_configuration(Pair::O, std::atan(std::sqrt(2.0))));
        ok = ok && o_comp.components.size() == 4;
        for (const auto& c : o_comp.components) {
            ok = ok && c.shape == ComponentShape::triangle;
            for (int k = 0; k < 3; ++k)
                ok = ok && near(c.cycle[k].dist(c.cycle[(k + 1) % 3]), 2.0 * std::sqrt(3.0),
                                1e-9);
        }
        const auto o_stats = vertex_stats(o_comp.vertices);
        ok = ok && o_stats.vertex_count == 12 && near(o_stats.min_pairwise, 2.0, 1e-9);

        const auto i1_comp = extract_compound(
            rotated_configuration(Pair::I, 0.5 * std::atan(2.0 / std::sqrt(5.0))));
        ok = ok && i1_comp.components.size() == 10;
        for (const auto& c : i1_comp.components) {
            ok = ok && c.shape == ComponentShape::triangle;
            for (int k = 0; k < 3; ++k)
                ok = ok && near(c.cycle[k].dist(c.cycle[(k + 1) % 3]), 2.0 * std::sqrt(3.0),
                                1e-9);
        }
        const auto i1_stats = vertex_stats(i1_comp.vertices);
        ok = ok && i1_stats.vertex_count == 30 &&
             near(i1_stats.min_pairwise, std::sqrt(5.0) - 1.0, 1e-9);

        const auto i2_comp = extract_compound(rotated_configuration(Pair::I, pi / 4));
        ok = ok && i2_comp.components.size() == 5;
        for (const auto& c : i2_comp.components) {
            ok = ok && c.shape == ComponentShape::skeleton;
            for (std::size_t a = 0; a < c.cycle.size(); ++a)
                for (std::size_t b = a + 1; b < c.cycle.size(); ++b)
                    ok = ok && near(c.cycle[a].dist(c.cycle[b]), 2.0 * std::sqrt(2.0), 1e-9);
        }

        const auto i3_comp = extract_compound(rotated_configuration(Pair::I, std::atan(tau)));
        ok = ok && i3_comp.components.size() == 6;
        for (const auto& c : i3_comp.components) ok = ok && c.shape == ComponentShape::star;

        for (std::size_t i = 0; i < o_comp.components.size(); ++i)
            for (std::size_t j = i + 1; j < o_comp.components.size(); ++j)
                ok = ok && std::abs(linking_number(o_comp.components[i].cycle,
                                                   o_comp.components[j].cycle)) == 1;
        for (std::size_t i = 0; i < i1_comp.components.size(); ++i)
            for (std::size_t j = i + 1; j < i1_comp.components.size(); ++j)
                ok = ok && std::abs(linking_number(i1_comp.components[i].cycle,
                                                   i1_comp.components[j].cycle)) == 1;
        const auto pentagons = star_inner_pentagons(i3_comp);
        for (std::size_t i = 0; i < pentagons.size(); ++i)
            for (std::size_t j = i + 1; j < pentagons.size(); ++j)
                ok = ok && std::abs(linking_number(pentagons[i], pentagons[j])) == 1;

        criterion(13, "4/10 triangles, 5 skeletons, 6 stars; pairwise simple linking", ok);
    }

    // 14. Touching-ball radii for the two direction sets.
    {
        const auto id_comp = extract_compound(
            rotated_configuration(Pair::I, 0.5 * std::atan(2.0 / std::sqrt(5.0))));
        std::vector<Vec3> id_dirs;
        for (const auto& v : id_comp.vertices) id_dirs.push_back(v.normalized());

        const auto co_comp =
            extract_compound(rotated_configuration(Pair::O, std::atan(std::sqrt(2.0))));
        std::vector<Vec3> co_dirs;
        for (const auto& v : co_comp.vertices) co_dirs.push_back(v.normalized());

        const bool ok = near(id_ball_radius(id_dirs), 1.0 / std::sqrt(5.0), 1e-12) &&
                        near(id_ball_radius(co_dirs), 1.0, 1e-12);
        criterion(14, "ball radii 1/sqrt 5 and 1 for the two vertex direction sets", ok);
    }

    // 15. The cubic expressing the touching radius through the squared
    // distance.
    {
        criterion(15, "r = 12x^3 - 62x^2 + 74x - 3 at the icosahedron maximum",
                  radii_identity_check().deviation <= 1e-12);
    }

    // 16. At pi/2 each configuration becomes the dual solid's edge lines.
    {
        const bool ok = duality_deviation(Pair::T) <= 1e-9 &&
                        duality_deviation(Pair::O) <= 1e-9 && duality_deviation(Pair::I) <= 1e-9;
        criterion(16, "quarter-turn duality holds for all three pairs", ok);
    }

    std::printf("%s: %d of 16 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
