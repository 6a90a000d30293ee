#include "blochlip/dilatation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "blochlip/rng.hpp"

namespace blochlip {

std::vector<Point> dilatation_directions(int dim, int per_dim) {
    std::vector<Point> dirs;
    if (dim == 1) {
        dirs.push_back(Point{1.0});
        dirs.push_back(Point{-1.0});
        return dirs;
    }
    if (dim == 2) {
        const int n = per_dim * 2;
        dirs.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double a = 6.283185307179586 * k / n;
            dirs.push_back(Point{std::cos(a), std::sin(a)});
        }
        return dirs;
    }
    for (int i = 0; i < dim; ++i) {
        Point plus(dim), minus(dim);
        plus[i] = 1.0;
        minus[i] = -1.0;
        dirs.push_back(plus);
        dirs.push_back(minus);
    }
    SplitMix64 rng(0x9e3779b9u + static_cast<std::uint64_t>(dim));
    const int extra = per_dim * dim - 2 * dim;
    for (int i = 0; i < extra; ++i) dirs.push_back(random_unit_vector(rng, dim));
    return dirs;
}

DilatationResult local_dilatation(const Mapping& f, const Point& x, const RadiusSchedule& schedule,
                                  bool force_sampled) {
    DilatationResult result;
    result.used_oracle = f.has_oracle();
    result.sampled = std::numeric_limits<double>::quiet_NaN();
    if (result.used_oracle) result.value = f.dilatation_oracle(x);
    if (result.used_oracle && !force_sampled) return result;

    const double clearance = f.source.clearance(x);
    if (!(clearance > 0.0))
        throw std::invalid_argument("local_dilatation: point has no interior clearance");
    const double r0 = schedule.r0_scale * clearance;

    const auto dirs = dilatation_directions(x.dim(), schedule.directions_per_dim);
    const Point fx = f(x);

    double sampled = 0.0;
    const int first_trailing = schedule.levels - schedule.trailing_shells;
    double radius = r0;
    for (int level = 0; level < schedule.levels; ++level, radius *= 0.5) {
        if (level < first_trailing) continue;  // limsup: only the finest shells count
        for (const Point& u : dirs) {
            const Point y = x + radius * u;
            const double dx = distance(x, y);
            if (dx == 0.0) continue;
            const double q = distance(f(y), fx) / dx;
            if (!std::isfinite(q))
                throw std::domain_error("local_dilatation: non-finite difference quotient");
            sampled = std::max(sampled, q);
        }
    }
    result.sampled = sampled;
    if (!result.used_oracle) result.value = sampled;
    return result;
}

}  // namespace blochlip
