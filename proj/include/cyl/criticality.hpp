#pragma once

#include <vector>

#include "cyl/platonic.hpp"

// Critical points of the minimum-distance curve delta -> min over orbits of
// the branch distances on [0, pi/2]: smooth interior maxima of a single
// branch, corners where the active branch changes, zeros, and the interval
// endpoints. Also single-branch maximization, real root isolation for
// polynomials, and the cubic identity tying the touching radius of the
// icosahedral neighboring branch to its squared distance.

namespace cyl {

enum class CriticalKind { smooth_max, corner, zero, endpoint };

const char* critical_kind_name(CriticalKind k);

struct CriticalPoint {
    double delta = 0.0;
    double d_sq = 0.0;
    double radius = 0.0;          // radius_from_distance(sqrt(d_sq))
    CriticalKind kind = CriticalKind::endpoint;
    bool local_max = false;       // smooth maxima and corner maxima
    std::vector<int> active;      // orbit labels within 1e-9 of the minimum
};

// Scans min_distance_sq on a uniform grid (default 4096 intervals), then
// refines each event by bisection to 1e-12 in delta: active-label changes
// become corners, grid minima reaching below 1e-14 become zeros, and
// single-branch slope sign changes become smooth maxima. Sorted by delta,
// endpoints included.
std::vector<CriticalPoint> critical_catalog(Pair p, int grid = 4096);

struct BranchMax {
    double delta = 0.0;
    double d_sq = 0.0;
    bool at_endpoint = false;  // maximum attained at 0 or pi/2, not interior
};

// Maximum of one orbit branch over [0, pi/2]: coarse grid argmax, then
// golden-section refinement to the stated delta tolerance.
BranchMax maximize_branch(Pair p, int orbit_label, double tol = 1e-12);

struct Polynomial {
    std::vector<double> coefficients;  // ascending degree

    double operator()(double t) const {
        double v = 0.0;
        for (std::size_t i = coefficients.size(); i-- > 0;) v = v * t + coefficients[i];
        return v;
    }
};

// All real roots of p on [lo, hi]: sign-change bracketing on a grid of the
// given step, bisection to the stated tolerance. Exact zeros at grid points
// are kept once.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi,
                               double step = 1e-4, double tol = 1e-13);

struct RadiiIdentityReport {
    double x = 0.0;          // squared neighboring distance, exact form
    double r_closed = 0.0;   // touching radius, exact form
    double r_cubic = 0.0;    // 12x^3 - 62x^2 + 74x - 3
    double deviation = 0.0;  // |r_closed - r_cubic|
};

// Evaluates both exact forms for the icosahedral neighboring maximum and the
// cubic that expresses the radius through the squared distance.
RadiiIdentityReport radii_identity_check();

}  // namespace cyl
