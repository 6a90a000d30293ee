#pragma once

#include <cstddef>
#include <functional>

#include "blochlip/curve.hpp"
#include "blochlip/partition.hpp"
#include "blochlip/weight.hpp"

namespace blochlip {

using Metric = std::function<double(const Point&, const Point&)>;

// Euclidean chord metric, the default everywhere.
Metric euclidean_metric();

// Length value together with how it was obtained. achieved_tol is the gap
// between the last two refinement sums; on success it is <= the requested
// tolerance, otherwise converged is false (reported, never silent).
struct LengthEstimate {
    double value = 0.0;
    double achieved_tol = 0.0;
    std::size_t partition_size = 0;
    bool converged = true;
};

// Hard cap on refinement: 2^20 knots.
inline constexpr std::size_t kMaxKnots = std::size_t{1} << 20;

// Sum of consecutive chord distances d(gamma(t_{i-1}), gamma(t_i)) over the
// partition knots.
double polygonal_length(const Curve& curve, const Partition& partition, const Metric& metric = {});

// sup over partitions of the polygonal sums, estimated by dyadic bisection
// starting from the curve's own vertex parameters (exact for polylines) and
// stopping when two successive sums differ by less than tol. The value is a
// lower bound of the true length, monotone under refinement.
LengthEstimate curve_length(const Curve& curve, double tol);

// Weighted integral sum  sum_i w(gamma(tag_i)) * d(gamma(t_{i-1}), gamma(t_i)).
// The partition must carry tags.
double stieltjes_sum(const Weight& weight, const Curve& curve, const Partition& partition);

// Riemann-Stieltjes integral of w along the curve: limit of tagged sums over
// bisections, stopped by the Cauchy criterion |S_k - S_{k-1}| < tol.
LengthEstimate weighted_length(const Weight& weight, const Curve& curve, double tol,
                               TagRule rule = TagRule::Left);

// Straight-segment reduction: ||x-y|| times the 1-D integral of
// t -> w((1-t)x + t y) by adaptive quadrature.
double segment_weighted_length(const Weight& weight, const Point& x, const Point& y, double tol);

}  // namespace blochlip
