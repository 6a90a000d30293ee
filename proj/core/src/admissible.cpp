#include "blochlip/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blochlip/dilatation.hpp"

namespace blochlip {

OperatorMonotoneProfile OperatorMonotoneProfile::atanh_profile() {
    OperatorMonotoneProfile p;
    p.phi = [](double t) { return 0.5 * std::log((1.0 + t) / (1.0 - t)); };
    p.dphi = [](double t) { return 1.0 / (1.0 - t * t); };
    p.name = "atanh";
    return p;
}

OperatorMonotoneProfile OperatorMonotoneProfile::identity_profile() {
    OperatorMonotoneProfile p;
    p.phi = [](double t) { return t; };
    p.dphi = [](double) { return 1.0; };
    p.name = "identity";
    return p;
}

AdmissibleWeight AdmissibleWeight::custom(std::function<double(const Point&, const Point&)> fn) {
    AdmissibleWeight w;
    w.kind = Kind::Custom;
    // Symmetrize: max{W(x,y), W(y,x)} stays admissible.
    w.eval = [fn = std::move(fn)](const Point& x, const Point& y) {
        return std::max(fn(x, y), fn(y, x));
    };
    return w;
}

AdmissibleWeight holland_walsh_W() {
    AdmissibleWeight w;
    w.kind = AdmissibleWeight::Kind::HollandWalsh;
    w.eval = [](const Point& x, const Point& y) {
        const double nx = x.norm_sq(), ny = y.norm_sq();
        if (!(nx < 1.0) || !(ny < 1.0))
            throw std::domain_error("holland_walsh_W: arguments must lie in the open unit ball");
        return std::sqrt(1.0 - nx) * std::sqrt(1.0 - ny);
    };
    return w;
}

AdmissibleWeight jocic_W(const OperatorMonotoneProfile& profile) {
    AdmissibleWeight w;
    w.kind = AdmissibleWeight::Kind::Jocic;
    w.eval = [phi = profile.dphi](const Point& x, const Point& y) {
        const double dx = phi(x.norm());
        const double dy = phi(y.norm());
        if (!(dx > 0.0) || !(dy > 0.0)) throw std::domain_error("jocic_W: phi' must be positive");
        return 1.0 / (std::sqrt(dx) * std::sqrt(dy));
    };
    return w;
}

AdmissibleWeight minmax_W(const Weight& omega, const Weight& omega_tilde, const Mapping& f) {
    if (!omega.monotone_in_norm || !omega_tilde.monotone_in_norm)
        throw std::invalid_argument("minmax_W: weights must be flagged monotone_in_norm");
    if (!omega.convex_domain || !omega_tilde.convex_domain)
        throw std::invalid_argument("minmax_W: weights must live on convex domains");
    AdmissibleWeight w;
    w.kind = AdmissibleWeight::Kind::MinMax;
    w.eval = [omega, omega_tilde, f](const Point& x, const Point& y) {
        const double num = std::min(omega_tilde(f(x)), omega_tilde(f(y)));
        const double den = std::max(omega(x), omega(y));
        return num / den;
    };
    return w;
}

AdmissibleWeight normal_W(const Mapping& f) {
    AdmissibleWeight w;
    w.kind = AdmissibleWeight::Kind::NormalSpherical;
    w.eval = [f](const Point& x, const Point& y) {
        const double nx = x.norm_sq(), ny = y.norm_sq();
        if (!(nx < 1.0) || !(ny < 1.0))
            throw std::domain_error("normal_W: source points must lie in the open unit ball");
        const double fx = f(x).norm_sq();
        const double fy = f(y).norm_sq();
        return (std::sqrt(1.0 - nx) * std::sqrt(1.0 - ny)) /
               (std::sqrt(1.0 + fx) * std::sqrt(1.0 + fy));
    };
    return w;
}

AdmissibleWeight normal_minmax_W(const Mapping& f) {
    AdmissibleWeight w;
    w.kind = AdmissibleWeight::Kind::Custom;
    w.eval = [f](const Point& x, const Point& y) {
        const double nx = x.norm_sq(), ny = y.norm_sq();
        if (!(nx < 1.0) || !(ny < 1.0))
            throw std::domain_error("normal_minmax_W: source points must lie in the open unit ball");
        const double fx = f(x).norm_sq();
        const double fy = f(y).norm_sq();
        return std::min(1.0 - nx, 1.0 - ny) / std::max(1.0 + fx, 1.0 + fy);
    };
    return w;
}

AdmissibleWeight canonical_W(const Mapping& f, const Weight& omega, const Weight& omega_tilde,
                             DistanceFn d_omega, DistanceFn d_omega_tilde) {
    if (!d_omega || !d_omega_tilde)
        throw std::invalid_argument("canonical_W: distance evaluators required");
    AdmissibleWeight w;
    w.kind = AdmissibleWeight::Kind::Canonical;
    w.eval = [f, omega, omega_tilde, dw = std::move(d_omega),
              dwt = std::move(d_omega_tilde)](const Point& x, const Point& y) {
        if (x == y) return omega_tilde(f(x)) / omega(x);
        const Point fx = f(x), fy = f(y);
        const double dist_quotient = dw(x, y) / distance(x, y);
        if (fx == fy) return omega_tilde(fx) / dist_quotient;
        const double image_quotient = dwt(fx, fy) / distance(fx, fy);
        return image_quotient / dist_quotient;
    };
    return w;
}

AdmissibilityReport admissibility_check(const AdmissibleWeight& W, const Mapping& f,
                                        const Weight& omega, const Weight& omega_tilde,
                                        const DistanceFn& d_omega, const DistanceFn& d_omega_tilde,
                                        std::size_t pairs, double sample_radius, std::uint64_t seed,
                                        const AdmissibilityTolerances& tol) {
    AdmissibilityReport report;
    const int dim = f.source.dim;
    const auto pair_samples = halton_pairs_in_ball(dim, sample_radius, pairs, seed, 1e-9);
    report.pairs_checked = pair_samples.size();

    for (const auto& [x, y] : pair_samples) {
        // (a) symmetry, exact up to the stated tolerance.
        const double wxy = W(x, y);
        const double wyx = W(y, x);
        report.worst_symmetry = std::max(report.worst_symmetry, std::abs(wxy - wyx));

        // (b) diagonal identity W(x,x) = wt(f(x))/w(x).
        const double diag = std::abs(W(x, x) - omega_tilde(f(x)) / omega(x));
        report.worst_diagonal = std::max(report.worst_diagonal, diag);

        // (d) W(x,y) d_Y(f(x),f(y))/d_X(x,y) <= d_wt(f(x),f(y))/d_w(x,y).
        const Point fx = f(x), fy = f(y);
        const double dy = distance(fx, fy);
        if (dy > 0.0) {
            const double lhs = wxy * dy / distance(x, y);
            const double rhs = d_omega_tilde(fx, fy) / d_omega(x, y);
            const double margin = lhs - rhs;
            if (margin > report.worst_quotient_margin) {
                report.worst_quotient_margin = margin;
                report.quotient_witness_x = x;
                report.quotient_witness_y = y;
            }
        }
    }

    // (c) liminf_{z->x} W(x,z) >= W(x,x), sampled along shrinking radii at a
    // subset of base points; the inferior envelope over the finest shells is
    // compared against the diagonal value.
    const std::size_t bases = std::min<std::size_t>(32, pair_samples.size());
    const auto dirs = dilatation_directions(dim, 8);
    for (std::size_t b = 0; b < bases; ++b) {
        const Point& x = pair_samples[b].first;
        const double diag = W(x, x);
        const double clearance = std::max(1e-6, f.source.clearance(x));
        double envelope = std::numeric_limits<double>::infinity();
        double r = 1e-2 * clearance * std::pow(0.5, 14);
        for (int shell = 0; shell < 3; ++shell, r *= 0.5)
            for (const Point& u : dirs) envelope = std::min(envelope, W(x, x + r * u));
        report.worst_liminf_margin = std::max(report.worst_liminf_margin, diag - envelope);
    }

    report.symmetry_ok = report.worst_symmetry <= tol.symmetry;
    report.diagonal_ok = report.worst_diagonal <= tol.diagonal;
    report.liminf_ok = report.worst_liminf_margin <= tol.liminf;
    report.quotient_ok = report.worst_quotient_margin <= tol.solver_error;
    return report;
}

}  // namespace blochlip
