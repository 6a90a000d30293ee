#pragma once

#include <complex>
#include <functional>

#include "blochlip/domain.hpp"
#include "blochlip/point.hpp"

namespace blochlip {

// Evaluable map between finite-dimensional normed domains, optionally with an
// exact differential-norm oracle |Df(x)| = sup_{|l|=1} |Df(x) l|.
struct Mapping {
    std::function<Point(const Point&)> eval;
    std::function<double(const Point&)> dilatation_oracle;  // may be empty
    DomainDescriptor source;
    DomainDescriptor target;

    Point operator()(const Point& p) const { return eval(p); }
    bool has_oracle() const { return static_cast<bool>(dilatation_oracle); }

    static Mapping identity(int dim, double eps_boundary = 0.05) {
        Mapping m;
        m.eval = [](const Point& p) { return p; };
        m.dilatation_oracle = [](const Point&) { return 1.0; };
        m.source = DomainDescriptor::ball(dim, eps_boundary);
        m.target = DomainDescriptor::full_space(dim);
        return m;
    }

    static Mapping constant(const Point& value, DomainDescriptor source) {
        Mapping m;
        m.eval = [value](const Point&) { return value; };
        m.dilatation_oracle = [](const Point&) { return 0.0; };
        m.source = source;
        m.target = DomainDescriptor::full_space(value.dim());
        return m;
    }

    // Analytic map of the unit disc: |Df(z)| = |f'(z)|.
    static Mapping analytic(std::function<std::complex<double>(std::complex<double>)> f,
                            std::function<std::complex<double>(std::complex<double>)> df,
                            double eps_boundary = 0.05) {
        Mapping m;
        m.eval = [f = std::move(f)](const Point& p) { return Point::from_complex(f(p.to_complex())); };
        if (df)
            m.dilatation_oracle = [df = std::move(df)](const Point& p) { return std::abs(df(p.to_complex())); };
        m.source = DomainDescriptor::ball(2, eps_boundary);
        m.target = DomainDescriptor::full_space(2);
        return m;
    }
};

}  // namespace blochlip
