#include "cyl/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cyl/rotation.hpp"

namespace cyl {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt 5 - 1) / 2

// Golden-section extremum of f on [lo, hi]; maximizes when sign = +1,
// minimizes when sign = -1. Returns the abscissa.
template <class F>
double golden_section(F&& f, double lo, double hi, double tol, int sign) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = sign * f(x1);
    double f2 = sign * f(x2);
    while (b - a > tol) {
        if (f1 >= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = sign * f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = sign * f(x2);
        }
    }
    return 0.5 * (a + b);
}

CriticalPoint make_point(Pair p, double delta, CriticalKind kind, bool local_max) {
    const MinResult m = min_distance_sq(p, delta);
    CriticalPoint cp;
    cp.delta = delta;
    cp.d_sq = m.d_sq;
    cp.radius = radius_from_distance(std::sqrt(m.d_sq));
    cp.kind = kind;
    cp.local_max = local_max;
    cp.active = m.active;
    return cp;
}

}  // namespace

const char* critical_kind_name(CriticalKind k) {
    switch (k) {
        case CriticalKind::smooth_max: return "smooth-max";
        case CriticalKind::corner: return "corner";
        case CriticalKind::zero: return "zero";
        case CriticalKind::endpoint: return "endpoint";
    }
    return "?";
}

std::vector<CriticalPoint> critical_catalog(Pair p, int grid) {
    if (grid < 16) throw std::invalid_argument("critical_catalog: grid too coarse");
    const auto& ctx = context(p);
    const int norb = static_cast<int>(ctx.orbits.orbits.size());
    const double hi = pi / 2.0;
    const double step = hi / grid;

    auto curve = [&](double d) { return min_distance_sq(p, d).d_sq; };
    auto argmin_label = [&](double d) {
        int best = 0;
        double bv = branch_distance_sq(p, 0, d);
        for (int label = 1; label < norb; ++label) {
            const double v = branch_distance_sq(p, label, d);
            if (v < bv) { bv = v; best = label; }
        }
        return best;
    };

    std::vector<double> value(grid + 1);
    std::vector<int> label(grid + 1);
    for (int i = 0; i <= grid; ++i) {
        const double d = i * step;
        value[i] = curve(d);
        label[i] = argmin_label(d);
    }

    std::vector<CriticalPoint> points;
    points.push_back(make_point(p, 0.0, CriticalKind::endpoint, false));
    points.push_back(make_point(p, hi, CriticalKind::endpoint, false));

    // Corners: the argmin label changes across a grid cell. Refine the
    // crossing of the two branches by bisection.
    for (int i = 0; i < grid; ++i) {
        if (label[i] == label[i + 1]) continue;
        const int la = label[i], lb = label[i + 1];
        auto g = [&](double d) {
            return branch_distance_sq(p, la, d) - branch_distance_sq(p, lb, d);
        };
        double a = i * step, b = (i + 1) * step;
        double ga = g(a), gb = g(b);
        if (!(ga < 0.0 && gb > 0.0)) {
            // Exact ties happen where several branches vanish together at an
            // interval endpoint; those are endpoint rows, not corners.
            if ((ga == 0.0 && i == 0) || (gb == 0.0 && i + 1 == grid)) continue;
            throw std::runtime_error(
                "critical_catalog: corner refinement failed to bracket near delta=" +
                std::to_string(0.5 * (a + b)) + " labels " + std::to_string(la) + "," +
                std::to_string(lb));
        }
        while (b - a > 1e-12) {
            const double m = 0.5 * (a + b);
            const double gm = g(m);
            if (gm == 0.0) { a = b = m; break; }
            if (gm < 0.0) { a = m; ga = gm; } else { b = m; gb = gm; }
        }
        const double dc = 0.5 * (a + b);
        if (dc < 1e-9 || dc > hi - 1e-9) continue;
        const double h = 1e-6;
        const double slope_l = (curve(dc) - curve(dc - h)) / h;
        const double slope_r = (curve(dc + h) - curve(dc)) / h;
        if (std::abs(slope_l - slope_r) < 1e-6) continue;  // tangential crossing
        points.push_back(make_point(p, dc, CriticalKind::corner,
                                    slope_l > 0.0 && slope_r < 0.0));
    }

    // Zeros: grid local minima of the curve that refine to below 1e-14.
    for (int i = 1; i < grid; ++i) {
        if (!(value[i] <= value[i - 1] && value[i] <= value[i + 1])) continue;
        if (value[i] == value[i - 1] && value[i] == value[i + 1]) continue;
        const double dz = golden_section(curve, (i - 1) * step, (i + 1) * step, 1e-12, -1);
        if (curve(dz) >= 1e-14) continue;
        points.push_back(make_point(p, dz, CriticalKind::zero, false));
    }

    // Smooth maxima: grid local maxima with one branch active throughout the
    // neighborhood; refine on that single branch.
    for (int i = 1; i < grid; ++i) {
        if (!(value[i] >= value[i - 1] && value[i] >= value[i + 1])) continue;
        if (value[i] == value[i - 1] && value[i] == value[i + 1]) continue;
        if (label[i - 1] != label[i] || label[i] != label[i + 1]) continue;
        const int la = label[i];
        auto branch = [&](double d) { return branch_distance_sq(p, la, d); };
        const double dm = golden_section(branch, (i - 1) * step, (i + 1) * step, 1e-12, +1);
        points.push_back(make_point(p, dm, CriticalKind::smooth_max, true));
    }

    std::sort(points.begin(), points.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.delta < b.delta; });
    return points;
}

BranchMax maximize_branch(Pair p, int orbit_label, double tol) {
    const int grid = 2048;
    const double hi = pi / 2.0;
    auto branch = [&](double d) { return branch_distance_sq(p, orbit_label, d); };

    int best = 0;
    double bv = branch(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double v = branch(i * hi / grid);
        if (v > bv) { bv = v; best = i; }
    }
    // An endpoint value within grid noise of the best interior value counts
    // as the maximum: a constant branch, or one peaking at both ends, would
    // otherwise hand the argmax to whichever interior sample rounding favors.
    BranchMax r;
    const double v0 = branch(0.0);
    const double v1 = branch(hi);
    const double tie = 1e-9 * (1.0 + std::fabs(bv));
    if (best == 0 || best == grid || v0 >= bv - tie || v1 >= bv - tie) {
        r.delta = v0 >= v1 ? 0.0 : hi;
        r.d_sq = std::max(v0, v1);
        r.at_endpoint = true;
        return r;
    }
    r.delta = golden_section(branch, (best - 1) * hi / grid, (best + 1) * hi / grid, 1e-8, +1);

    // Direct value comparison cannot place the argmax better than about
    // sqrt(eps) because the branch is flat to machine precision there.
    // Bisecting on the sign of a five-point central-difference derivative
    // reaches the requested delta tolerance instead.
    const double h = std::min(1e-3, 0.25 * std::min(r.delta, hi - r.delta));
    auto slope = [&](double x) {
        return (-branch(x + 2 * h) + 8 * branch(x + h) - 8 * branch(x - h) + branch(x - 2 * h)) /
               (12 * h);
    };
    double a = std::max(r.delta - 1e-5, 2 * h);
    double b = std::min(r.delta + 1e-5, hi - 2 * h);
    if (a < b && slope(a) > 0.0 && slope(b) < 0.0) {
        while (b - a > tol) {
            const double m = 0.5 * (a + b);
            (slope(m) > 0.0 ? a : b) = m;
        }
        r.delta = 0.5 * (a + b);
    }
    r.d_sq = branch(r.delta);
    return r;
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi,
                               double step, double tol) {
    if (p.coefficients.empty() || p.coefficients.back() == 0.0)
        throw std::invalid_argument("real_roots: leading coefficient must be nonzero");
    std::vector<double> roots;
    double x0 = lo;
    double f0 = p(x0);
    while (x0 < hi) {
        const double x1 = std::min(x0 + step, hi);
        const double f1 = p(x1);
        if (f0 == 0.0) {
            if (roots.empty() || std::abs(roots.back() - x0) > tol) roots.push_back(x0);
        } else if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                const double fm = p(m);
                if (fm == 0.0) { a = b = m; break; }
                if (fa * fm < 0.0) { b = m; } else { a = m; fa = fm; }
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0 && (roots.empty() || std::abs(roots.back() - x0) > tol)) roots.push_back(x0);
    return roots;
}

RadiiIdentityReport radii_identity_check() {
    const double s5 = std::sqrt(5.0);
    RadiiIdentityReport r;
    r.x = (9.0 - s5 - std::sqrt(6.0 * (5.0 + s5))) / 4.0;
    r.r_closed = 11.0 - 5.0 * s5 + std::sqrt(3.0 * (85.0 - 38.0 * s5));
    r.r_cubic = 12.0 * r.x * r.x * r.x - 62.0 * r.x * r.x + 74.0 * r.x - 3.0;
    r.deviation = std::abs(r.r_closed - r.r_cubic);
    return r;
}

}  // namespace cyl
