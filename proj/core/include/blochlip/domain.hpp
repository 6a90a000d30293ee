#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blochlip/point.hpp"

namespace blochlip {

enum class DomainKind { Ball, FullSpace, Box };

// Describes where weights/mappings live. Ball means the open unit ball; the
// "safe" region keeps a margin eps_boundary away from the unit sphere so that
// singular weights such as 1/(1-|x|^2) stay integrable along query data.
struct DomainDescriptor {
    DomainKind kind = DomainKind::FullSpace;
    int dim = 2;
    double eps_boundary = 0.05;  // Ball only
    Point lo, hi;                // Box only

    static DomainDescriptor ball(int dim, double eps_boundary = 0.05) {
        if (dim < 1) throw std::invalid_argument("DomainDescriptor: dim must be >= 1");
        if (!(eps_boundary > 0.0) || !(eps_boundary < 1.0))
            throw std::invalid_argument("DomainDescriptor: eps_boundary must be in (0,1)");
        DomainDescriptor d;
        d.kind = DomainKind::Ball;
        d.dim = dim;
        d.eps_boundary = eps_boundary;
        return d;
    }

    static DomainDescriptor full_space(int dim) {
        if (dim < 1) throw std::invalid_argument("DomainDescriptor: dim must be >= 1");
        DomainDescriptor d;
        d.kind = DomainKind::FullSpace;
        d.dim = dim;
        return d;
    }

    static DomainDescriptor box(const Point& lo, const Point& hi) {
        if (lo.dim() != hi.dim()) throw std::invalid_argument("DomainDescriptor: box corner dimension mismatch");
        for (int i = 0; i < lo.dim(); ++i)
            if (!(lo[i] < hi[i])) throw std::invalid_argument("DomainDescriptor: box must have positive extent");
        DomainDescriptor d;
        d.kind = DomainKind::Box;
        d.dim = lo.dim();
        d.lo = lo;
        d.hi = hi;
        return d;
    }

    bool contains(const Point& p) const {
        if (p.dim() != dim) return false;
        switch (kind) {
            case DomainKind::Ball: return p.norm() < 1.0;
            case DomainKind::FullSpace: return true;
            case DomainKind::Box:
                for (int i = 0; i < dim; ++i)
                    if (p[i] < lo[i] || p[i] > hi[i]) return false;
                return true;
        }
        return false;
    }

    // |p| <= 1 - eps_boundary for balls; the full box / space otherwise.
    bool safe_contains(const Point& p) const {
        if (p.dim() != dim) return false;
        if (kind == DomainKind::Ball) return p.norm() <= safe_radius();
        return contains(p);
    }

    double safe_radius() const {
        if (kind != DomainKind::Ball)
            throw std::logic_error("DomainDescriptor: safe_radius is only defined for balls");
        return 1.0 - eps_boundary;
    }

    // Distance from p to the true domain boundary; used to scale the radius
    // schedule of difference quotients. FullSpace has no boundary, so a unit
    // scale is returned.
    double clearance(const Point& p) const {
        if (p.dim() != dim) throw std::invalid_argument("DomainDescriptor: dimension mismatch");
        switch (kind) {
            case DomainKind::Ball: return 1.0 - p.norm();
            case DomainKind::FullSpace: return 1.0;
            case DomainKind::Box: {
                double m = std::numeric_limits<double>::infinity();
                for (int i = 0; i < dim; ++i) m = std::min({m, p[i] - lo[i], hi[i] - p[i]});
                return m;
            }
        }
        return 0.0;
    }
};

}  // namespace blochlip
