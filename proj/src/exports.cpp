#include "cyl/exports.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "cyl/criticality.hpp"
#include "cyl/rotation.hpp"

namespace cyl {

namespace {

std::string format_g(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double parse_number(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a number: " + s);
    }
    if (used != s.size())
        throw std::invalid_argument(std::string(what) + ": trailing characters in " + s);
    return v;
}

// t mapped through arctan(sqrt(t)) for each positive root of the degree-6
// polynomial behind the icosahedral global maximum; the maximum of the min
// curve picks the relevant root.
double icosahedral_delta_max() {
    const Polynomial sextic{{9.0, -84.0, -4.0, 190.0, 0.0, -80.0, 5.0}};
    const auto roots = real_roots(sextic, 0.0, 20.0);
    double best_delta = 0.0, best_val = -1.0;
    for (double t : roots) {
        if (t <= 0.0) continue;
        const double delta = std::atan(std::sqrt(t));
        const double v = min_distance_sq(Pair::I, delta).d_sq;
        if (v > best_val) { best_val = v; best_delta = delta; }
    }
    return best_delta;
}

void write_vec(std::ostream& os, const Vec3& v) {
    os << '[' << format_full(v.x) << ", " << format_full(v.y) << ", " << format_full(v.z)
       << ']';
}

}  // namespace

std::string format_full(double x) { return format_g(x, 17); }
std::string format_angle(double x) { return format_g(x, 15); }

double parse_delta_spec(Pair p, const std::string& spec) {
    if (spec == "o6") return pi / 4.0;
    if (spec == "delta-max") {
        switch (p) {
            case Pair::T: return pi / 4.0;
            case Pair::O: return std::atan(std::pow(3.0, 0.25) / std::sqrt(2.0));
            case Pair::I: return icosahedral_delta_max();
        }
    }
    if (spec == "min-1" || spec == "min-2" || spec == "min-3") {
        const int k = spec[4] - '0';
        if (p == Pair::T)
            throw std::invalid_argument("pair T has no interior zeros of the min curve");
        if (p == Pair::O) {
            if (k == 1) return std::atan(std::sqrt(2.0));
            throw std::invalid_argument("pair O has a single interior zero, min-1");
        }
        switch (k) {
            case 1: return 0.5 * std::atan(2.0 / std::sqrt(5.0));
            case 2: return pi / 4.0;
            case 3: return std::atan((1.0 + std::sqrt(5.0)) / 2.0);
        }
    }
    return parse_number(spec, "delta");
}

double touching_radius(Pair p, double delta) {
    return radius_from_distance(std::sqrt(min_distance_sq(p, delta).d_sq));
}

double parse_radius_spec(Pair p, double delta, const std::string& spec) {
    if (spec == "auto") return touching_radius(p, delta);
    const double r = parse_number(spec, "radius");
    if (r < 0.0) throw std::invalid_argument("radius: must be nonnegative");
    return r;
}

void write_curve_csv(std::ostream& os, Pair p, int samples) {
    if (samples < 2) throw std::invalid_argument("curve: need at least 2 samples");
    const auto& ctx = context(p);
    const int norb = static_cast<int>(ctx.orbits.orbits.size());

    os << "delta";
    for (int label = 0; label < norb; ++label) os << ",orbit_" << label;
    os << ",min,active,radius\n";

    for (int i = 0; i < samples; ++i) {
        const double delta = (pi / 2.0) * i / (samples - 1);
        os << format_full(delta);
        for (int label = 0; label < norb; ++label)
            os << ',' << format_full(branch_distance_sq(p, label, delta));
        const MinResult m = min_distance_sq(p, delta);
        os << ',' << format_full(m.d_sq) << ',';
        for (std::size_t k = 0; k < m.active.size(); ++k) {
            if (k) os << '+';
            os << m.active[k];
        }
        os << ',' << format_full(radius_from_distance(std::sqrt(m.d_sq))) << '\n';
    }
}

void write_lines_json(std::ostream& os, Pair p, double delta, double radius,
                      const std::vector<TangentLine>& lines) {
    os << "{\n";
    os << "  \"pair\": \"" << pair_name(p) << "\",\n";
    os << "  \"delta\": " << format_full(delta) << ",\n";
    os << "  \"radius\": " << format_full(radius) << ",\n";
    os << "  \"lines\": [\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        os << "    {\"tangency\": ";
        write_vec(os, lines[i].tangency);
        os << ", \"direction\": ";
        write_vec(os, lines[i].direction);
        os << (i + 1 < lines.size() ? "},\n" : "}\n");
    }
    os << "  ]\n}\n";
}

void write_lines_csv(std::ostream& os, const std::vector<TangentLine>& lines) {
    os << "line,tangency_x,tangency_y,tangency_z,direction_x,direction_y,direction_z\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        os << i << ',' << format_full(l.tangency.x) << ',' << format_full(l.tangency.y) << ','
           << format_full(l.tangency.z) << ',' << format_full(l.direction.x) << ','
           << format_full(l.direction.y) << ',' << format_full(l.direction.z) << '\n';
    }
}

void write_cylinders_obj(std::ostream& os, const std::vector<TangentLine>& lines,
                         double radius, double half_length, bool sphere) {
    constexpr int kSides = 48;
    int base = 0;

    auto emit_vertex = [&](const Vec3& v) {
        os << "v " << format_full(v.x) << ' ' << format_full(v.y) << ' ' << format_full(v.z)
           << '\n';
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& l = lines[li];
        const Vec3 u = l.tangency;  // unit, orthogonal to the direction
        const Vec3 w = l.direction.cross(u);
        const Vec3 lo = l.tangency - l.direction * half_length;
        const Vec3 hi = l.tangency + l.direction * half_length;

        os << "o cylinder_" << li << '\n';
        for (int ring = 0; ring < 2; ++ring) {
            const Vec3& c = ring == 0 ? lo : hi;
            for (int k = 0; k < kSides; ++k) {
                const double a = 2.0 * pi * k / kSides;
                emit_vertex(c + (u * std::cos(a) + w * std::sin(a)) * radius);
            }
        }
        emit_vertex(lo);
        emit_vertex(hi);
        const int lo_center = base + 2 * kSides + 1;  // 1-indexed
        const int hi_center = base + 2 * kSides + 2;
        for (int k = 0; k < kSides; ++k) {
            const int k1 = (k + 1) % kSides;
            os << "f " << base + 1 + k << ' ' << base + 1 + k1 << ' '
               << base + kSides + 1 + k1 << ' ' << base + kSides + 1 + k << '\n';
        }
        for (int k = 0; k < kSides; ++k) {
            const int k1 = (k + 1) % kSides;
            os << "f " << lo_center << ' ' << base + 1 + k1 << ' ' << base + 1 + k << '\n';
            os << "f " << hi_center << ' ' << base + kSides + 1 + k << ' '
               << base + kSides + 1 + k1 << '\n';
        }
        base += 2 * kSides + 2;
    }

    if (sphere) {
        constexpr int kStacks = 24;
        constexpr int kSlices = 48;
        os << "o unit_sphere\n";
        emit_vertex({0, 0, 1});
        for (int s = 1; s < kStacks; ++s) {
            const double phi = pi * s / kStacks;
            for (int k = 0; k < kSlices; ++k) {
                const double a = 2.0 * pi * k / kSlices;
                emit_vertex({std::sin(phi) * std::cos(a), std::sin(phi) * std::sin(a),
                             std::cos(phi)});
            }
        }
        emit_vertex({0, 0, -1});
        const int north = base + 1;
        const int south = base + 1 + (kStacks - 1) * kSlices + 1;
        auto ring_vertex = [&](int s, int k) { return base + 2 + (s - 1) * kSlices + (k % kSlices); };
        for (int k = 0; k < kSlices; ++k)
            os << "f " << north << ' ' << ring_vertex(1, k) << ' ' << ring_vertex(1, k + 1)
               << '\n';
        for (int s = 1; s < kStacks - 1; ++s)
            for (int k = 0; k < kSlices; ++k)
                os << "f " << ring_vertex(s, k) << ' ' << ring_vertex(s + 1, k) << ' '
                   << ring_vertex(s + 1, k + 1) << ' ' << ring_vertex(s, k + 1) << '\n';
        for (int k = 0; k < kSlices; ++k)
            os << "f " << south << ' ' << ring_vertex(kStacks - 1, k + 1) << ' '
               << ring_vertex(kStacks - 1, k) << '\n';
    }
}

LinesFile read_lines_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    LinesFile f;
    f.pair = j.at("pair").get<std::string>();
    f.delta = j.at("delta").get<double>();
    f.radius = j.at("radius").get<double>();
    for (const auto& e : j.at("lines")) {
        const auto& t = e.at("tangency");
        const auto& d = e.at("direction");
        f.lines.push_back({{t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>()},
                           {d.at(0).get<double>(), d.at(1).get<double>(), d.at(2).get<double>()}});
    }
    return f;
}

}  // namespace cyl
