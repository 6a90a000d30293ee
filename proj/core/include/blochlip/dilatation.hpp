#pragma once

#include <vector>

#include "blochlip/mapping.hpp"
#include "blochlip/point.hpp"

namespace blochlip {

// Geometric radius schedule r_j = r0_scale * clearance * 2^-j for the limsup
// difference quotient, with the estimate taken as the max over the trailing
// shells (damps cancellation at the smallest radius).
struct RadiusSchedule {
    double r0_scale = 1e-2;
    int levels = 17;
    int trailing_shells = 3;
    int directions_per_dim = 8;
};

struct DilatationResult {
    double value = 0.0;    // oracle when present, sampled estimate otherwise
    double sampled = 0.0;  // finite-difference estimate (NaN when skipped)
    bool used_oracle = false;
};

// Deterministic unit directions: evenly spaced angles in 2-D, signed axes plus
// seeded sphere points in higher dimensions. Axes are always included so that
// axis-attained operator norms are hit exactly.
std::vector<Point> dilatation_directions(int dim, int per_dim);

// Local dilatation d_f(x): limsup of d_Y(f(x), f(y)) / d_X(x, y) as y -> x,
// sampled over the radius schedule. With an exact oracle present the oracle
// value is returned and the sampled estimate is kept for cross-checking
// (computed only when force_sampled is set).
DilatationResult local_dilatation(const Mapping& f, const Point& x, const RadiusSchedule& schedule = {},
                                  bool force_sampled = false);

}  // namespace blochlip
