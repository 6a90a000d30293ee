#include "blochlip/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace blochlip {

double hyperbolic_distance(const Point& x, const Point& y) {
    const double nx = x.norm_sq();
    const double ny = y.norm_sq();
    if (!(nx < 1.0) || !(ny < 1.0))
        throw std::domain_error("hyperbolic_distance: arguments must lie in the open unit ball");
    const double d = distance(x, y);
    if (d == 0.0) return 0.0;
    return std::asinh(d / (std::sqrt(1.0 - nx) * std::sqrt(1.0 - ny)));
}

double chordal_distance(const Point& z, const Point& w) {
    const double d = distance(z, w);
    if (d == 0.0) return 0.0;
    return d / (std::sqrt(1.0 + z.norm_sq()) * std::sqrt(1.0 + w.norm_sq()));
}

}  // namespace blochlip
