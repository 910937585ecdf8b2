#include "cyl/platonic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool vec_less(const Vec3& a, const Vec3& b, double tol) {
    if (std::abs(a.x - b.x) > tol) return a.x < b.x;
    if (std::abs(a.y - b.y) > tol) return a.y < b.y;
    if (std::abs(a.z - b.z) > tol) return a.z < b.z;
    return false;
}

std::vector<Vec3> raw_vertices(SolidName name) {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    switch (name) {
        case SolidName::tetrahedron:
            return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        case SolidName::octahedron:
            return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        case SolidName::cube: {
            std::vector<Vec3> v;
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
            return v;
        }
        case SolidName::icosahedron: {
            std::vector<Vec3> v;
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    v.push_back({0, s1 * 1.0, s2 * tau});
                    v.push_back({s1 * 1.0, s2 * tau, 0});
                    v.push_back({s2 * tau, 0, s1 * 1.0});
                }
            return v;
        }
        case SolidName::dodecahedron: {
            std::vector<Vec3> v;
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
            // The roof family (0, tau, 1/tau) rather than (0, 1/tau, tau):
            // the former is in dual position to the icosahedron above (its
            // vertices are the icosahedron's face directions), the latter is
            // its mirror image.
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    v.push_back({0, s1 * tau, s2 / tau});
                    v.push_back({s1 * tau, s2 / tau, 0});
                    v.push_back({s2 / tau, 0, s1 * tau});
                }
            return v;
        }
    }
    throw std::logic_error("raw_vertices: unknown solid");
}

std::vector<std::pair<int, int>> nearest_pairs(const std::vector<Vec3>& verts) {
    const int n = static_cast<int>(verts.size());
    double dmin = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dmin = std::min(dmin, verts[i].dist(verts[j]));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (verts[i].dist(verts[j]) < dmin * (1.0 + 1e-6)) edges.emplace_back(i, j);
    return edges;
}

Solid finish_solid(SolidName name, std::vector<Vec3> verts) {
    // Scale so edge midpoints land on the unit sphere, then canonicalize.
    auto edges = nearest_pairs(verts);
    const Vec3 mid = (verts[edges[0].first] + verts[edges[0].second]) * 0.5;
    const double scale = 1.0 / mid.norm();
    for (auto& v : verts) v = v * scale;

    std::sort(verts.begin(), verts.end(),
              [](const Vec3& a, const Vec3& b) { return vec_less(a, b, 1e-9); });

    Solid s;
    s.name = name;
    s.vertices = std::move(verts);
    s.edges = nearest_pairs(s.vertices);
    std::sort(s.edges.begin(), s.edges.end());

    std::vector<int> deg(s.vertices.size(), 0);
    for (const auto& [a, b] : s.edges) { ++deg[a]; ++deg[b]; }
    s.vertex_degree = deg[0];
    for (int d : deg)
        if (d != s.vertex_degree) throw std::logic_error("finish_solid: irregular degree");

    s.h = s.vertices[0].norm();
    for (const auto& v : s.vertices)
        if (std::abs(v.norm() - s.h) > 1e-9) throw std::logic_error("finish_solid: irregular radius");
    return s;
}

PairContext make_context(Pair p) {
    PairContext c;
    c.pair = p;
    c.solid = base_solid(p);
    c.lines = edge_tangent_lines(c.solid);
    c.group = rotation_group(p);
    c.orbits = edge_pair_orbits(p);
    return c;
}

}  // namespace

Pair parse_pair(const std::string& s) {
    if (s == "T" || s == "t") return Pair::T;
    if (s == "O" || s == "o") return Pair::O;
    if (s == "I" || s == "i") return Pair::I;
    throw std::invalid_argument("pair must be one of T, O, I");
}

const char* pair_name(Pair p) {
    switch (p) {
        case Pair::T: return "T";
        case Pair::O: return "O";
        case Pair::I: return "I";
    }
    return "?";
}

int edge_count(Pair p) {
    switch (p) {
        case Pair::T: return 6;
        case Pair::O: return 12;
        case Pair::I: return 30;
    }
    return 0;
}

Solid build_solid(SolidName name) { return finish_solid(name, raw_vertices(name)); }

Solid base_solid(Pair p) {
    switch (p) {
        case Pair::T: return build_solid(SolidName::tetrahedron);
        case Pair::O: return build_solid(SolidName::octahedron);
        case Pair::I: return build_solid(SolidName::icosahedron);
    }
    throw std::logic_error("base_solid: unknown pair");
}

Solid dual_solid(Pair p) {
    switch (p) {
        case Pair::T: {
            auto verts = raw_vertices(SolidName::tetrahedron);
            for (auto& v : verts) v = -v;
            return finish_solid(SolidName::tetrahedron, std::move(verts));
        }
        case Pair::O: return build_solid(SolidName::cube);
        case Pair::I: return build_solid(SolidName::dodecahedron);
    }
    throw std::logic_error("dual_solid: unknown pair");
}

RotationGroup rotation_group(Pair p) {
    const Solid s = base_solid(p);
    // A vertex rotation together with a half turn about an incident edge
    // midpoint generates the full proper group. edges[0] touches vertex 0.
    const Vec3 vaxis = s.vertices[0].normalized();
    const Vec3 eaxis =
        ((s.vertices[s.edges[0].first] + s.vertices[s.edges[0].second]) * 0.5).normalized();
    const std::vector<Rotation> gens = {
        rotation_about_axis(vaxis, 2.0 * kPi / s.vertex_degree),
        rotation_about_axis(eaxis, kPi),
    };

    RotationGroup g;
    g.elements.push_back(Rotation{});
    auto known = [&](const Rotation& r) {
        for (const auto& e : g.elements)
            if (e.max_entry_diff(r) < 1e-9) return true;
        return false;
    };
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        for (const auto& gen : gens) {
            const Rotation r = gen.compose(g.elements[i]);
            if (!known(r)) {
                if (g.elements.size() >= 200)
                    throw std::logic_error("rotation_group: closure did not terminate");
                g.elements.push_back(r);
            }
        }
    }
    return g;
}

std::vector<TangentLine> edge_tangent_lines(const Solid& s) {
    std::vector<TangentLine> lines;
    lines.reserve(s.edges.size());
    for (const auto& [a, b] : s.edges) {
        const Vec3 mid = (s.vertices[a] + s.vertices[b]) * 0.5;
        TangentLine l{mid.normalized(), (s.vertices[b] - s.vertices[a]).normalized()};
        if (!is_valid_tangent_line(l)) throw std::logic_error("edge_tangent_lines: bad line");
        lines.push_back(l);
    }
    return lines;
}

std::vector<int> edge_permutation(const Solid&, const std::vector<TangentLine>& lines,
                                  const Rotation& r, double tol) {
    const int n = static_cast<int>(lines.size());
    std::vector<int> perm(n, -1);
    for (int i = 0; i < n; ++i) {
        const TangentLine rl = r.apply(lines[i]);
        int found = -1;
        for (int j = 0; j < n; ++j) {
            if (lines[j].tangency.dist(rl.tangency) < tol &&
                std::abs(std::abs(lines[j].direction.dot(rl.direction)) - 1.0) < tol) {
                if (found >= 0) throw std::logic_error("edge_permutation: ambiguous match");
                found = j;
            }
        }
        if (found < 0) throw std::logic_error("edge_permutation: rotation does not preserve the solid");
        perm[i] = found;
    }
    return perm;
}

std::vector<std::pair<int, int>> neighboring_pairs(const Solid& s) {
    const auto lines = edge_tangent_lines(s);
    const int k = s.vertex_degree;
    std::set<std::pair<int, int>> pairs;
    for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
        const Rotation rot = rotation_about_axis(s.vertices[vi].normalized(), 2.0 * kPi / k);
        std::vector<int> incident;
        for (std::size_t e = 0; e < s.edges.size(); ++e)
            if (s.edges[e].first == static_cast<int>(vi) ||
                s.edges[e].second == static_cast<int>(vi))
                incident.push_back(static_cast<int>(e));
        for (int e : incident) {
            const Vec3 rmid = rot.apply(lines[e].tangency);
            int image = -1;
            for (int f : incident) {
                if (lines[f].tangency.dist(rmid) < 1e-9) { image = f; break; }
            }
            if (image < 0 || image == e)
                throw std::logic_error("neighboring_pairs: vertex rotation does not cycle edges");
            pairs.emplace(std::min(e, image), std::max(e, image));
        }
    }
    return {pairs.begin(), pairs.end()};
}

OrbitTable edge_pair_orbits(Pair p) {
    const Solid s = base_solid(p);
    const auto lines = edge_tangent_lines(s);
    const RotationGroup g = rotation_group(p);
    const int n = static_cast<int>(lines.size());

    std::vector<std::vector<int>> perms;
    perms.reserve(g.elements.size());
    for (const auto& r : g.elements) perms.push_back(edge_permutation(s, lines, r));

    auto pair_id = [n](int i, int j) { return i * n + j; };  // requires i < j
    std::vector<int> orbit_of(n * n, -1);
    std::vector<Orbit> orbits;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (orbit_of[pair_id(i, j)] >= 0) continue;
            const int id = static_cast<int>(orbits.size());
            Orbit orb;
            for (const auto& perm : perms) {
                const int a = std::min(perm[i], perm[j]);
                const int b = std::max(perm[i], perm[j]);
                if (orbit_of[pair_id(a, b)] < 0) {
                    orbit_of[pair_id(a, b)] = id;
                    orb.members.emplace_back(a, b);
                }
            }
            std::sort(orb.members.begin(), orb.members.end());
            orb.representative = orb.members.front();
            orbits.push_back(std::move(orb));
        }
    }

    // Orbit-invariant probe used only for the canonical label order.
    auto probe = [&](const Orbit& o) {
        const auto [a, b] = o.representative;
        const TangentLine la = rotate_tangent_line(lines[a], 0.1);
        const TangentLine lb = rotate_tangent_line(lines[b], 0.1);
        const double d = line_distance(la, lb);
        return d * d;
    };
    std::vector<double> probes(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i) probes[i] = probe(orbits[i]);

    std::vector<int> order(orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (orbits[a].members.size() != orbits[b].members.size())
            return orbits[a].members.size() < orbits[b].members.size();
        return probes[a] < probes[b];
    });

    OrbitTable table;
    table.orbits.resize(orbits.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        table.orbits[rank] = std::move(orbits[order[rank]]);
        table.orbits[rank].label = static_cast<int>(rank);
    }

    // The constant branch sits at squared distance 4 for every delta.
    for (const auto& o : table.orbits) {
        const auto [a, b] = o.representative;
        bool constant = true;
        for (double delta : {0.1, 0.7, 1.3}) {
            const double d = line_distance(rotate_tangent_line(lines[a], delta),
                                           rotate_tangent_line(lines[b], delta));
            if (std::abs(d * d - 4.0) > 1e-9) { constant = false; break; }
        }
        if (constant) { table.opposite_label = o.label; break; }
    }

    const auto neigh = neighboring_pairs(s);
    for (const auto& o : table.orbits) {
        if (o.members.size() == neigh.size() &&
            std::equal(o.members.begin(), o.members.end(), neigh.begin())) {
            table.neighboring_label = o.label;
            break;
        }
    }
    return table;
}

const PairContext& context(Pair p) {
    switch (p) {
        case Pair::T: { static const PairContext c = make_context(Pair::T); return c; }
        case Pair::O: { static const PairContext c = make_context(Pair::O); return c; }
        case Pair::I: { static const PairContext c = make_context(Pair::I); return c; }
    }
    throw std::logic_error("context: unknown pair");
}

}  // namespace cyl
