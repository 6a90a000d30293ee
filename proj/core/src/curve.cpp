#include "blochlip/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochlip {

namespace {

std::vector<double> uniform_params(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    t.front() = 0.0;
    t.back() = 1.0;
    return t;
}

}  // namespace

Curve::Curve(std::vector<Point> vertices) : Curve(std::move(vertices), {}) {}

Curve::Curve(std::vector<Point> vertices, std::vector<double> params)
    : vertices_(std::move(vertices)), params_(std::move(params)) {
    if (vertices_.size() < 2) throw std::invalid_argument("Curve: need at least two vertices");
    if (params_.empty()) params_ = uniform_params(vertices_.size());
    if (params_.size() != vertices_.size())
        throw std::invalid_argument("Curve: params/vertices size mismatch");
    if (params_.front() != 0.0 || params_.back() != 1.0)
        throw std::invalid_argument("Curve: parameter endpoints must be exactly 0 and 1");
    for (std::size_t i = 1; i < params_.size(); ++i)
        if (!(params_[i] > params_[i - 1]))
            throw std::invalid_argument("Curve: parameters must be strictly increasing");
    const int d = vertices_.front().dim();
    for (const Point& v : vertices_) {
        if (v.dim() != d) throw std::invalid_argument("Curve: vertices must share one dimension");
        if (!v.all_finite()) throw std::invalid_argument("Curve: vertices must be finite");
    }
}

Curve Curve::segment(const Point& a, const Point& b) { return Curve({a, b}, {0.0, 1.0}); }

Point Curve::operator()(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("Curve: parameter outside [0,1]");
    if (t == 0.0) return vertices_.front();
    if (t == 1.0) return vertices_.back();
    const auto it = std::upper_bound(params_.begin(), params_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - params_.begin());
    const std::size_t lo = hi - 1;
    const double u = (t - params_[lo]) / (params_[hi] - params_[lo]);
    return lerp(vertices_[lo], vertices_[hi], u);
}

Curve Curve::reversed() const {
    std::vector<Point> verts(vertices_.rbegin(), vertices_.rend());
    std::vector<double> params(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) params[i] = 1.0 - params_[params_.size() - 1 - i];
    params.front() = 0.0;
    params.back() = 1.0;
    return Curve(std::move(verts), std::move(params));
}

Curve concat(const Curve& first, const Curve& second) {
    if (first.dim() != second.dim()) throw std::invalid_argument("concat: dimension mismatch");
    if (!(first.back() == second.front()))
        throw std::invalid_argument("concat: endpoint mismatch (exact equality required)");
    std::vector<Point> verts = first.vertices();
    verts.insert(verts.end(), second.vertices().begin() + 1, second.vertices().end());
    std::vector<double> params;
    params.reserve(verts.size());
    for (double t : first.params()) params.push_back(0.5 * t);
    const auto& sp = second.params();
    for (std::size_t i = 1; i < sp.size(); ++i) params.push_back(0.5 + 0.5 * sp[i]);
    params.front() = 0.0;
    params.back() = 1.0;
    return Curve(std::move(verts), std::move(params));
}

}  // namespace blochlip
