#include "blochlip/length.hpp"

#include <cmath>
#include <stdexcept>

#include "blochlip/quadrature.hpp"

namespace blochlip {

Metric euclidean_metric() {
    return [](const Point& a, const Point& b) { return distance(a, b); };
}

double polygonal_length(const Curve& curve, const Partition& partition, const Metric& metric) {
    const Metric& d = metric ? metric : euclidean_metric();
    const auto& knots = partition.knots();
    double sum = 0.0;
    Point prev = curve(knots.front());
    for (std::size_t i = 1; i < knots.size(); ++i) {
        Point cur = curve(knots[i]);
        sum += d(prev, cur);
        prev = cur;
    }
    return sum;
}

namespace {

// Refinement driver shared by curve_length and weighted_length. The initial
// partition is the curve's own vertex parameters, so polyline sums start
// exact; bisection then drives diam(T) -> 0.
template <typename SumFn>
LengthEstimate refine_until_cauchy(const Curve& curve, double tol, SumFn sum_of) {
    if (!(tol > 0.0)) throw std::invalid_argument("length estimate: tolerance must be positive");
    Partition part = Partition::of(curve.params());
    double prev = sum_of(part);
    LengthEstimate est;
    est.value = prev;
    est.partition_size = part.knots().size();
    est.converged = false;
    est.achieved_tol = std::numeric_limits<double>::infinity();
    while (true) {
        part = part.bisected();
        const double cur = sum_of(part);
        const double gap = std::abs(cur - prev);
        est.value = cur;
        est.achieved_tol = gap;
        est.partition_size = part.knots().size();
        if (gap < tol) {
            est.converged = true;
            return est;
        }
        if (part.knots().size() * 2 > kMaxKnots) return est;  // budget exhausted, reported as-is
        prev = cur;
    }
}

}  // namespace

LengthEstimate curve_length(const Curve& curve, double tol) {
    return refine_until_cauchy(curve, tol,
                               [&](const Partition& p) { return polygonal_length(curve, p); });
}

double stieltjes_sum(const Weight& weight, const Curve& curve, const Partition& partition) {
    if (!partition.has_tags())
        throw std::invalid_argument("stieltjes_sum: partition must carry tags");
    const auto& knots = partition.knots();
    const auto& tags = partition.tags();
    double sum = 0.0;
    Point prev = curve(knots.front());
    for (std::size_t i = 1; i < knots.size(); ++i) {
        Point cur = curve(knots[i]);
        sum += weight(curve(tags[i - 1])) * distance(prev, cur);
        prev = cur;
    }
    return sum;
}

LengthEstimate weighted_length(const Weight& weight, const Curve& curve, double tol, TagRule rule) {
    return refine_until_cauchy(curve, tol, [&](const Partition& p) {
        return stieltjes_sum(weight, curve, p.with_tag_rule(rule));
    });
}

double segment_weighted_length(const Weight& weight, const Point& x, const Point& y, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("segment_weighted_length: tolerance must be positive");
    const double len = distance(x, y);
    if (len == 0.0) return 0.0;
    const double integral = adaptive_simpson(
        [&](double t) { return weight(lerp(x, y, t)); }, 0.0, 1.0, tol / len);
    return len * integral;
}

}  // namespace blochlip
