#pragma once

#include <vector>

#include "blochlip/point.hpp"

namespace blochlip {

// Polyline curve over [0,1]: ordered vertices with strictly increasing
// parameter values whose endpoints are exactly 0 and 1. Evaluation is
// piecewise-linear interpolation. Smooth curves enter pre-sampled.
class Curve {
public:
    // Uniform parameter values.
    explicit Curve(std::vector<Point> vertices);
    Curve(std::vector<Point> vertices, std::vector<double> params);

    static Curve segment(const Point& a, const Point& b);

    int dim() const { return vertices_.front().dim(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<double>& params() const { return params_; }

    const Point& front() const { return vertices_.front(); }
    const Point& back() const { return vertices_.back(); }

    Point operator()(double t) const;

    Curve reversed() const;

private:
    std::vector<Point> vertices_;
    std::vector<double> params_;
};

// gamma1 followed by gamma2, reparameterized onto [0,1/2] and [1/2,1].
// Requires exact coordinate equality of the shared endpoint; callers snap
// endpoints themselves.
Curve concat(const Curve& first, const Curve& second);

}  // namespace blochlip
