#pragma once

#include <functional>
#include <string>

#include "blochlip/mapping.hpp"
#include "blochlip/metric_check.hpp"
#include "blochlip/point.hpp"
#include "blochlip/sampling.hpp"
#include "blochlip/weight.hpp"

namespace blochlip {

// Scalar profile phi on (-1,1) with its derivative, both supplied
// analytically. Only the scalar consequence of operator monotonicity is used:
// phi(b) - phi(a) <= sqrt(phi'(a)) sqrt(phi'(b)) (b - a).
struct OperatorMonotoneProfile {
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    std::string name;

    // phi(t) = (1/2) log((1+t)/(1-t)), phi'(t) = 1/(1-t^2).
    static OperatorMonotoneProfile atanh_profile();
    // phi(t) = t, phi' = 1.
    static OperatorMonotoneProfile identity_profile();
};

// Symmetric two-point weight W(x,y) matching omega_tilde(f(x))/omega(x) on the
// diagonal. Constructors below produce the symmetric closed forms directly;
// custom asymmetric inputs are symmetrized by max{W(x,y), W(y,x)}.
struct AdmissibleWeight {
    enum class Kind { HollandWalsh, MinMax, Jocic, NormalSpherical, Canonical, Custom };

    std::function<double(const Point&, const Point&)> eval;
    Kind kind = Kind::Custom;

    double operator()(const Point& x, const Point& y) const { return eval(x, y); }

    static AdmissibleWeight custom(std::function<double(const Point&, const Point&)> fn);
};

// sqrt(1-|x|^2) sqrt(1-|y|^2) on the unit ball.
AdmissibleWeight holland_walsh_W();

// 1 / ( sqrt(phi'(|x|)) sqrt(phi'(|y|)) ); with the atanh profile this is
// pointwise the Holland-Walsh weight.
AdmissibleWeight jocic_W(const OperatorMonotoneProfile& profile);

// min{omega_tilde(f(x)), omega_tilde(f(y))} / max{omega(x), omega(y)}; needs
// both weights monotone in the norm on convex domains.
AdmissibleWeight minmax_W(const Weight& omega, const Weight& omega_tilde, const Mapping& f);

// sqrt(1-|x|^2) sqrt(1-|y|^2) / ( sqrt(1+|f(x)|^2) sqrt(1+|f(y)|^2) ) for maps
// of the unit ball into the plane.
AdmissibleWeight normal_W(const Mapping& f);

// min{1-|x|^2, 1-|y|^2} / max{1+|f(x)|^2, 1+|f(y)|^2}: the min/max relaxation
// dominated by normal_W (min <= geometric mean and max >= geometric mean,
// applied before taking square roots).
AdmissibleWeight normal_minmax_W(const Mapping& f);

// The piecewise construction that is admissible for any mapping:
//   x == y               : omega_tilde(f(x)) / omega(x)
//   x != y, f(x) != f(y) : (d_wt(f(x),f(y)) / d_Y(f(x),f(y))) / (d_w(x,y) / d_X(x,y))
//   x != y, f(x) == f(y) : omega_tilde(f(x)) / (d_w(x,y) / d_X(x,y))
AdmissibleWeight canonical_W(const Mapping& f, const Weight& omega, const Weight& omega_tilde,
                             DistanceFn d_omega, DistanceFn d_omega_tilde);

// Report-only check of the four admissibility conditions on sampled pairs:
// (a) symmetry, (b) diagonal identity, (c) liminf toward the diagonal via
// shrinking-radius sampling, (d) W * (d_Y quotient) <= (d_wt quotient).
struct AdmissibilityReport {
    bool symmetry_ok = true;
    bool diagonal_ok = true;
    bool liminf_ok = true;
    bool quotient_ok = true;
    double worst_symmetry = 0.0;       // max |W(x,y)-W(y,x)|
    double worst_diagonal = 0.0;       // max |W(x,x) - wt(f(x))/w(x)|
    double worst_liminf_margin = 0.0;  // max W(x,x) - inf-envelope, clamped at 0
    double worst_quotient_margin = 0.0;  // max W*q - d-quotient, clamped at 0
    Point quotient_witness_x, quotient_witness_y;
    std::size_t pairs_checked = 0;

    bool passed() const { return symmetry_ok && diagonal_ok && liminf_ok && quotient_ok; }
};

struct AdmissibilityTolerances {
    double symmetry = 1e-12;
    double diagonal = 1e-12;
    double liminf = 1e-5;        // shrinking-radius envelope slack
    double solver_error = 1e-12; // error bar of the distance evaluators in (d)
};

AdmissibilityReport admissibility_check(const AdmissibleWeight& W, const Mapping& f,
                                        const Weight& omega, const Weight& omega_tilde,
                                        const DistanceFn& d_omega, const DistanceFn& d_omega_tilde,
                                        std::size_t pairs, double sample_radius, std::uint64_t seed,
                                        const AdmissibilityTolerances& tol = {});

}  // namespace blochlip
