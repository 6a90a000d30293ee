#pragma once

#include "blochlip/point.hpp"

namespace blochlip {

// Hyperbolic distance in the open unit ball induced by the weight
// 1/(1-|x|^2):  asinh( |x-y| / (sqrt(1-|x|^2) sqrt(1-|y|^2)) ).
// Throws std::domain_error when an argument reaches the unit sphere.
double hyperbolic_distance(const Point& x, const Point& y);

// Chordal form |z-w| / (sqrt(1+|z|^2) sqrt(1+|w|^2)); defined everywhere,
// symmetric, bounded by 1. The geodesic distance of the spherical weight
// 1/(1+|z|^2) is a separate numerical quantity with D_s <= d.
double chordal_distance(const Point& z, const Point& w);

}  // namespace blochlip
