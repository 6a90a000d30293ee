#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "blochlip/domain.hpp"
#include "blochlip/point.hpp"

namespace blochlip {

// Positive continuous scalar field on a domain, used as a conformal density.
// Evaluation enforces the domain and positivity: a violated precondition
// throws std::domain_error rather than returning garbage.
struct Weight {
    std::function<double(const Point&)> eval;
    DomainDescriptor domain;
    bool monotone_in_norm = false;
    bool convex_domain = false;
    // Limit of the weight as |y| -> infinity, when that limit exists (NaN
    // otherwise). Lets samplers treat overflowed image points gracefully:
    // for the spherical weight the contribution decays to 0.
    double limit_at_infinity = std::numeric_limits<double>::quiet_NaN();

    double operator()(const Point& p) const {
        if (!domain.contains(p)) throw std::domain_error("Weight: point outside weight domain");
        const double v = eval(p);
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("Weight: evaluator must be strictly positive and finite");
        return v;
    }

    static Weight unit(DomainDescriptor dom) {
        Weight w;
        w.eval = [](const Point&) { return 1.0; };
        w.domain = dom;
        w.monotone_in_norm = true;
        w.convex_domain = dom.kind != DomainKind::Box;  // balls and R^m are convex; boxes too
        w.limit_at_infinity = 1.0;
        return w;
    }

    static Weight constant(double c, DomainDescriptor dom) {
        if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("Weight::constant: c must be positive");
        Weight w;
        w.eval = [c](const Point&) { return c; };
        w.domain = dom;
        w.monotone_in_norm = true;
        w.convex_domain = true;
        w.limit_at_infinity = c;
        return w;
    }

    // 1/(1-|x|^2) on the open unit ball; blows up at the sphere, hence the
    // safe margin carried by the ball descriptor.
    static Weight hyperbolic(int dim, double eps_boundary = 0.05) {
        Weight w;
        w.eval = [](const Point& p) { return 1.0 / (1.0 - p.norm_sq()); };
        w.domain = DomainDescriptor::ball(dim, eps_boundary);
        w.monotone_in_norm = true;
        w.convex_domain = true;
        return w;
    }

    // 1/(1+|z|^2) on all of R^dim.
    static Weight spherical(int dim = 2) {
        Weight w;
        w.eval = [](const Point& p) { return 1.0 / (1.0 + p.norm_sq()); };
        w.domain = DomainDescriptor::full_space(dim);
        w.monotone_in_norm = true;
        w.convex_domain = true;
        w.limit_at_infinity = 0.0;
        return w;
    }

    static Weight custom(std::function<double(const Point&)> fn, DomainDescriptor dom,
                         bool monotone_in_norm = false, bool convex_domain = false) {
        Weight w;
        w.eval = std::move(fn);
        w.domain = dom;
        w.monotone_in_norm = monotone_in_norm;
        w.convex_domain = convex_domain;
        return w;
    }
};

}  // namespace blochlip
