#include "cyl/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace cyl {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
const double kTauCubed = 2.0 + kSqrt5;  // tau^3 for tau the golden ratio

}  // namespace

std::vector<TangentLine> rotated_configuration(Pair p, double delta) {
    const auto& ctx = context(p);
    std::vector<TangentLine> out;
    out.reserve(ctx.lines.size());
    for (const auto& l : ctx.lines) out.push_back(rotate_tangent_line(l, delta));
    return out;
}

double branch_distance_sq(Pair p, int orbit_label, double delta) {
    const auto& ctx = context(p);
    const auto& orbits = ctx.orbits.orbits;
    if (orbit_label < 0 || orbit_label >= static_cast<int>(orbits.size()))
        throw std::out_of_range("branch_distance_sq: no such orbit label");
    const auto [i, j] = orbits[orbit_label].representative;
    const double d = line_distance(rotate_tangent_line(ctx.lines[i], delta),
                                   rotate_tangent_line(ctx.lines[j], delta));
    return d * d;
}

double neighbor_distance_sq_general(double S, double alpha, double T) {
    if (T == 0.0) return 0.0;
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    const double one_minus_s2 = 1.0 - S * S;
    const double num = 4.0 * sa * sa * one_minus_s2 * one_minus_s2 * T * T;
    const double den = (S * S + T * T) * (1.0 - sa * sa * S * S + ca * ca * T * T);
    return num / den;
}

FormId parse_form_id(const std::string& s) {
    if (s == "O-neighbor") return FormId::o_neighbor;
    if (s == "O-green") return FormId::o_green;
    if (s == "I-neighbor") return FormId::i_neighbor;
    if (s == "I-3") return FormId::i_3;
    if (s == "I-5") return FormId::i_5;
    if (s == "I-8") return FormId::i_8;
    if (s == "I-9") return FormId::i_9;
    throw std::invalid_argument("unknown form id: " + s);
}

const char* form_id_name(FormId f) {
    switch (f) {
        case FormId::o_neighbor: return "O-neighbor";
        case FormId::o_green: return "O-green";
        case FormId::i_neighbor: return "I-neighbor";
        case FormId::i_3: return "I-3";
        case FormId::i_5: return "I-5";
        case FormId::i_8: return "I-8";
        case FormId::i_9: return "I-9";
    }
    return "?";
}

Pair form_pair(FormId f) {
    switch (f) {
        case FormId::o_neighbor:
        case FormId::o_green: return Pair::O;
        default: return Pair::I;
    }
}

double closed_form_branch(Pair p, FormId f, double delta) {
    if (form_pair(f) != p)
        throw std::domain_error("closed_form_branch: form does not belong to this pair");
    const double c2 = std::cos(2.0 * delta);
    const double s2 = std::sin(2.0 * delta);
    const double c4 = std::cos(4.0 * delta);
    const double s4 = std::sin(4.0 * delta);
    switch (f) {
        case FormId::o_neighbor:
            return -4.0 * s2 * s2 / ((c2 - 3.0) * (c2 + 5.0));
        case FormId::o_green: {
            const double c = std::cos(delta);
            const double s = std::sin(delta);
            const double num = 4.0 * c2 + kSqrt2 * s2;
            const double den = 6.0 * c * c * c * c + 8.0 * kSqrt2 * c * c * c * s + 8.0 * s * s * s * s;
            return num * num / den;
        }
        case FormId::i_neighbor:
            return -4.0 * s2 * s2 / ((c2 - (4.0 + kSqrt5)) * (c2 + 8.0 + 3.0 * kSqrt5));
        case FormId::i_3:
            return 4.0 * c2 * c2 / (3.0 + c2 * c2);
        case FormId::i_5: {
            const double num = kSqrt5 * s2 - 2.0 * c2;
            const double den = 21.0 + 4.0 * kSqrt5 * c2 + 8.0 * s2 - c4 - 4.0 * kSqrt5 * s4;
            return 8.0 * num * num / den;
        }
        case FormId::i_8: {
            const double num = 2.0 * c2 + s2;
            const double den = 25.0 + 8.0 * kSqrt5 + 4.0 * kTauCubed * (2.0 * s2 - c2) +
                               3.0 * c4 + 4.0 * s4;
            return 8.0 * num * num / den;
        }
        case FormId::i_9: {
            const double num = 2.0 * c2 + s2;
            const double den = kTauCubed * (25.0 - 8.0 * kSqrt5) + 4.0 * (2.0 * s2 - c2) +
                               kTauCubed * (3.0 * c4 + 4.0 * s4);
            return 8.0 * kTauCubed * num * num / den;
        }
    }
    throw std::domain_error("closed_form_branch: unknown form id");
}

int orbit_label_for_form(FormId f) {
    const Pair p = form_pair(f);
    const auto& ctx = context(p);
    const int n = static_cast<int>(ctx.orbits.orbits.size());
    int match = -1;
    for (int label = 0; label < n; ++label) {
        double err = 0.0;
        for (int j = 1; j < 32; ++j) {
            const double delta = j * (pi / 2.0) / 32.0;
            err = std::max(err, std::abs(branch_distance_sq(p, label, delta) -
                                         closed_form_branch(p, f, delta)));
            if (err > 1e-10) break;
        }
        if (err <= 1e-10) {
            if (match >= 0) throw std::logic_error("orbit_label_for_form: ambiguous match");
            match = label;
        }
    }
    if (match < 0) throw std::logic_error("orbit_label_for_form: no orbit matches the form");
    return match;
}

MinResult min_distance_sq(Pair p, double delta) {
    const auto& ctx = context(p);
    const int n = static_cast<int>(ctx.orbits.orbits.size());
    MinResult r;
    std::vector<double> vals(n);
    r.d_sq = vals[0] = branch_distance_sq(p, 0, delta);
    for (int label = 1; label < n; ++label) {
        vals[label] = branch_distance_sq(p, label, delta);
        r.d_sq = std::min(r.d_sq, vals[label]);
    }
    for (int label = 0; label < n; ++label)
        if (vals[label] - r.d_sq <= 1e-9) r.active.push_back(label);
    return r;
}

double configuration_min_distance(const std::vector<TangentLine>& lines) {
    if (lines.size() < 2)
        throw std::invalid_argument("configuration_min_distance: need at least 2 lines");
    double best = 1e300;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            best = std::min(best, line_distance(lines[i], lines[j]));
    return best;
}

}  // namespace cyl
