#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "blochlip/catalog.hpp"
#include "blochlip/curve.hpp"
#include "blochlip/dilatation.hpp"
#include "blochlip/length.hpp"
#include "blochlip/partition.hpp"
#include "blochlip/rng.hpp"
#include "blochlip/weight.hpp"

using namespace blochlip;

namespace {

Curve circle_arc(double angle0, double angle1, int segments) {
    std::vector<Point> verts;
    verts.reserve(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
        const double a = angle0 + (angle1 - angle0) * i / segments;
        verts.push_back(Point::xy(std::cos(a), std::sin(a)));
    }
    return Curve(std::move(verts));
}

Curve random_polyline(SplitMix64& rng, int vertices, double radius) {
    std::vector<Point> verts;
    verts.reserve(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) verts.push_back(random_in_ball(rng, 2, radius));
    return Curve(std::move(verts));
}

Partition random_partition(SplitMix64& rng, int interior) {
    std::vector<double> knots{0.0, 1.0};
    for (int i = 0; i < interior; ++i) knots.push_back(rng.uniform(1e-6, 1.0 - 1e-6));
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return Partition::of(std::move(knots));
}

Partition random_refinement(SplitMix64& rng, const Partition& parent, int extra) {
    std::vector<double> knots = parent.knots();
    for (int i = 0; i < extra; ++i) knots.push_back(rng.uniform(1e-6, 1.0 - 1e-6));
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return Partition::of(std::move(knots));
}

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("polygonal_length: unit segment with trivial partition") {
    const Curve seg = Curve::segment(Point::xy(0, 0), Point::xy(1, 0));
    CHECK(polygonal_length(seg, Partition::uniform(1)) == 1.0);
}

TEST_CASE("polygonal_length: quarter circle two-chord value") {
    const Curve quarter =
        Curve({Point::xy(1, 0), Point::xy(std::sqrt(2.0) / 2, std::sqrt(2.0) / 2), Point::xy(0, 1)},
              {0.0, 0.5, 1.0});
    // two equal chords of length sqrt(2 - sqrt(2))
    const double expected = 2.0 * std::sqrt(2.0 - std::sqrt(2.0));  // 1.530733729460359
    CHECK(polygonal_length(quarter, Partition::of({0.0, 0.5, 1.0})) ==
          doctest::Approx(expected).epsilon(1e-15));
    CHECK(polygonal_length(quarter, Partition::of({0.0, 0.5, 1.0})) ==
          doctest::Approx(1.530733729460359).epsilon(1e-12));
}

TEST_CASE("polygonal_length: refinement never shrinks the sum") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Curve gamma = random_polyline(rng, 3 + static_cast<int>(rng.next() % 8), 1.0);
        const Partition coarse = random_partition(rng, static_cast<int>(rng.next() % 6));
        const Partition fine = random_refinement(rng, coarse, 1 + static_cast<int>(rng.next() % 8));
        REQUIRE(fine.refines(coarse));
        const double a = polygonal_length(gamma, coarse);
        const double b = polygonal_length(gamma, fine);
        // exact in real arithmetic; allow accumulated rounding only
        CHECK(b >= a - 1e-12 * (1.0 + a));
    }
}

TEST_CASE("curve_length: straight segment is exact") {
    const Point x = Point::xy(0.25, -1.5), y = Point::xy(2.0, 0.5);
    const auto est = curve_length(Curve::segment(x, y), 1e-9);
    CHECK(est.converged);
    CHECK(est.value == doctest::Approx(distance(x, y)).epsilon(1e-15));
}

TEST_CASE("curve_length: quarter circle against the analytic arc length") {
    const auto est = curve_length(circle_arc(0.0, kPi / 2, 2048), 1e-6);
    CHECK(est.converged);
    CHECK(est.achieved_tol <= 1e-6);
    CHECK(std::abs(est.value - kPi / 2) <= 1e-4);
}

TEST_CASE("curve_length: full circle against the analytic arc length") {
    const auto est = curve_length(circle_arc(0.0, 2 * kPi, 4096), 1e-6);
    CHECK(est.converged);
    CHECK(std::abs(est.value - 2 * kPi) <= 1e-3);
}

TEST_CASE("curve_length: lower bound by the endpoint gap") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Curve gamma = random_polyline(rng, 4 + static_cast<int>(rng.next() % 6), 1.0);
        const auto est = curve_length(gamma, 1e-9);
        CHECK(est.value >= distance(gamma.front(), gamma.back()) - 1e-12);
    }
}

TEST_CASE("concat: L-shaped polyline and midpoint evaluation") {
    const Curve a = Curve::segment(Point::xy(0, 0), Point::xy(1, 0));
    const Curve b = Curve::segment(Point::xy(1, 0), Point::xy(1, 1));
    const Curve joined = concat(a, b);
    CHECK(curve_length(joined, 1e-12).value == 2.0);
    CHECK(joined(0.5) == Point::xy(1, 0));
    CHECK(joined(0.25) == Point::xy(0.5, 0.0));
}

TEST_CASE("concat: curve followed by its reverse doubles the length") {
    const Curve gamma =
        Curve({Point::xy(0, 0), Point::xy(0.5, 0.25), Point::xy(1, 0)}, {0.0, 0.5, 1.0});
    const Curve loop = concat(gamma, gamma.reversed());
    const double single = curve_length(gamma, 1e-12).value;
    const double doubled = curve_length(loop, 1e-12).value;
    CHECK(doubled == doctest::Approx(2.0 * single).epsilon(1e-15));
}

TEST_CASE("concat: additivity on random polylines") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Curve a = random_polyline(rng, 3 + static_cast<int>(rng.next() % 5), 1.0);
        std::vector<Point> verts = {a.back()};
        for (int i = 0; i < 3; ++i) verts.push_back(random_in_ball(rng, 2, 1.0));
        Curve b{std::move(verts)};
        const double la = curve_length(a, 1e-12).value;
        const double lb = curve_length(b, 1e-12).value;
        const double lc = curve_length(concat(a, b), 1e-12).value;
        CHECK(lc == doctest::Approx(la + lb).epsilon(1e-14));
    }
}

TEST_CASE("concat: endpoint mismatch throws") {
    const Curve a = Curve::segment(Point::xy(0, 0), Point::xy(1, 0));
    const Curve b = Curve::segment(Point::xy(1, 1e-15), Point::xy(1, 1));
    CHECK_THROWS_AS(concat(a, b), std::invalid_argument);
}

TEST_CASE("stieltjes_sum: unit weight reduces to the polygonal sum") {
    SplitMix64 rng(3);
    const Weight one = Weight::unit(DomainDescriptor::full_space(2));
    for (int trial = 0; trial < 20; ++trial) {
        const Curve gamma = random_polyline(rng, 5, 1.0);
        const Partition part = random_partition(rng, 6).with_left_tags();
        CHECK(stieltjes_sum(one, gamma, part) ==
              doctest::Approx(polygonal_length(gamma, part)).epsilon(1e-15));
    }
}

TEST_CASE("stieltjes_sum: constant weight factors out") {
    SplitMix64 rng(4);
    const Weight c = Weight::constant(3.25, DomainDescriptor::full_space(2));
    const Curve gamma = random_polyline(rng, 6, 1.0);
    const Partition part = random_partition(rng, 5).with_midpoint_tags();
    CHECK(stieltjes_sum(c, gamma, part) ==
          doctest::Approx(3.25 * polygonal_length(gamma, part)).epsilon(1e-14));
}

TEST_CASE("stieltjes_sum: four-term left-tag sum on a hyperbolic segment") {
    // gamma(t) = t/2 on the real axis, w(x) = 1/(1-x^2), knots {0,1/4,1/2,3/4,1}:
    // (1 + 64/63 + 16/15 + 64/55) / 8, frozen from exact rational arithmetic.
    const Weight w = Weight::hyperbolic(1);
    const Curve seg = Curve::segment(Point{0.0}, Point{0.5});
    const Partition part = Partition::uniform(4).with_left_tags();
    const double expected = (1.0 + 64.0 / 63.0 + 16.0 / 15.0 + 64.0 / 55.0) / 8.0;
    CHECK(expected == doctest::Approx(0.5307720057720058).epsilon(1e-14));
    CHECK(stieltjes_sum(w, seg, part) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("stieltjes_sum: requires tags") {
    const Weight one = Weight::unit(DomainDescriptor::full_space(2));
    const Curve seg = Curve::segment(Point::xy(0, 0), Point::xy(1, 0));
    CHECK_THROWS_AS(stieltjes_sum(one, seg, Partition::uniform(4)), std::invalid_argument);
}

TEST_CASE("stieltjes_sum: tag independence bounded by the modulus of continuity") {
    // w(x) = 2 + x1 is 1-Lipschitz; |sum(T~) - sum(T~')| <= eps * Pi_T with
    // eps = Lip(w o gamma) * diam(T).
    SplitMix64 rng(9);
    const Weight w = Weight::custom([](const Point& p) { return 2.0 + p[0]; },
                                    DomainDescriptor::full_space(2));
    for (int trial = 0; trial < 25; ++trial) {
        const Curve gamma = random_polyline(rng, 6, 1.0);
        const Partition base = random_partition(rng, 10);
        const double diam = base.diameter();
        double speed = 0.0;
        const auto& params = gamma.params();
        const auto& verts = gamma.vertices();
        for (std::size_t i = 1; i < verts.size(); ++i)
            speed = std::max(speed, distance(verts[i - 1], verts[i]) / (params[i] - params[i - 1]));
        const double left = stieltjes_sum(w, gamma, base.with_left_tags());
        const double mid = stieltjes_sum(w, gamma, base.with_midpoint_tags());
        const double bound = speed * diam * polygonal_length(gamma, base);
        CHECK(std::abs(left - mid) <= bound + 1e-12);
    }
}

TEST_CASE("weighted_length: unit weight equals curve_length") {
    const Curve quarter = circle_arc(0.0, kPi / 2, 512);
    const Weight one = Weight::unit(DomainDescriptor::full_space(2));
    const auto wl = weighted_length(one, quarter, 1e-7);
    const auto cl = curve_length(quarter, 1e-7);
    CHECK(wl.converged);
    CHECK(wl.value == doctest::Approx(cl.value).epsilon(1e-7));
}

TEST_CASE("weighted_length: hyperbolic weight on a radial segment hits atanh") {
    const Weight w = Weight::hyperbolic(1);
    const Curve seg = Curve::segment(Point{0.0}, Point{0.5});
    const auto est = weighted_length(w, seg, 1e-6);
    CHECK(est.converged);
    CHECK(std::abs(est.value - std::atanh(0.5)) <= 2e-6);

    const auto mid = weighted_length(w, seg, 1e-8, TagRule::Midpoint);
    CHECK(mid.converged);
    CHECK(mid.partition_size < est.partition_size);  // midpoint tags converge faster
    CHECK(std::abs(mid.value - std::atanh(0.5)) <= 1e-8);
}

TEST_CASE("weighted_length: constant curve has zero length") {
    const Weight w = Weight::hyperbolic(2);
    const Curve still = Curve({Point::xy(0.1, 0.1), Point::xy(0.1, 0.1)}, {0.0, 1.0});
    const auto est = weighted_length(w, still, 1e-9);
    CHECK(est.converged);
    CHECK(est.value == 0.0);
}

TEST_CASE("weighted_length: constant weight matches c * curve_length to machine precision") {
    SplitMix64 rng(21);
    const Weight c = Weight::constant(1.7, DomainDescriptor::full_space(2));
    for (int trial = 0; trial < 10; ++trial) {
        const Curve gamma = random_polyline(rng, 7, 1.0);
        const auto wl = weighted_length(c, gamma, 1e-12);
        const auto cl = curve_length(gamma, 1e-12);
        CHECK(wl.value == doctest::Approx(1.7 * cl.value).epsilon(1e-14));
    }
}

TEST_CASE("weighted_length: non-convergence is reported, not silent") {
    // An impossible tolerance exhausts the knot budget; the estimate still
    // carries the last value and gap.
    const Weight w = Weight::hyperbolic(1);
    const Curve seg = Curve::segment(Point{0.0}, Point{0.9});
    const auto est = weighted_length(w, seg, 1e-15);
    CHECK_FALSE(est.converged);
    CHECK(est.achieved_tol > 1e-15);
    CHECK(est.partition_size > 100000);
}

TEST_CASE("weighted_length: curve exiting the weight domain throws") {
    const Weight w = Weight::hyperbolic(2);
    const Curve seg = Curve::segment(Point::xy(0, 0), Point::xy(1.5, 0));
    CHECK_THROWS_AS(weighted_length(w, seg, 1e-6), std::domain_error);
}

TEST_CASE("segment_weighted_length: zero segment, unit weight, atanh closed form") {
    const Weight hyp = Weight::hyperbolic(1);
    const Weight one = Weight::unit(DomainDescriptor::full_space(3));
    CHECK(segment_weighted_length(hyp, Point{0.3}, Point{0.3}, 1e-10) == 0.0);

    const Point a{-0.2, 0.4, 1.0};
    const Point b{0.7, -0.1, 2.0};
    CHECK(segment_weighted_length(one, a, b, 1e-10) ==
          doctest::Approx(distance(a, b)).epsilon(1e-12));

    const double val = segment_weighted_length(hyp, Point{0.0}, Point{0.5}, 1e-10);
    CHECK(std::abs(val - std::atanh(0.5)) <= 1e-8);
}

TEST_CASE("segment_weighted_length: agrees with weighted_length on the 2-vertex curve") {
    const Weight w = Weight::hyperbolic(2);
    const Point a = Point::xy(-0.3, 0.1), b = Point::xy(0.5, 0.4);
    const double direct = segment_weighted_length(w, a, b, 1e-9);
    const auto refined = weighted_length(w, Curve::segment(a, b), 1e-6, TagRule::Midpoint);
    CHECK(refined.converged);
    CHECK(std::abs(direct - refined.value) <= 1e-5);
}

TEST_CASE("segment_weighted_length: segment touching the unit sphere throws") {
    const Weight w = Weight::hyperbolic(2);
    CHECK_THROWS_AS(segment_weighted_length(w, Point::xy(0, 0), Point::xy(1.0, 0), 1e-8),
                    std::domain_error);
}

TEST_CASE("image-curve bound: L(f o gamma) <= 2 M L(gamma) for catalog maps") {
    SplitMix64 rng(33);
    for (const auto& entry : catalog()) {
        if (entry.mapping.source.dim != 2) continue;
        for (int trial = 0; trial < 20; ++trial) {
            const Curve gamma = random_polyline(rng, 8, 0.8);
            // Sampled dilatation bound over the curve: vertices and midpoints.
            double M = 0.0;
            std::vector<Point> image;
            const auto& verts = gamma.vertices();
            for (std::size_t i = 0; i < verts.size(); ++i) {
                M = std::max(M, local_dilatation(entry.mapping, verts[i]).value);
                if (i + 1 < verts.size())
                    M = std::max(M,
                                 local_dilatation(entry.mapping, lerp(verts[i], verts[i + 1], 0.5)).value);
                image.push_back(entry.mapping(verts[i]));
            }
            bool degenerate = true;
            for (std::size_t i = 1; i < image.size(); ++i)
                if (!(image[i] == image[0])) degenerate = false;
            if (degenerate) continue;  // constant map: image curve collapses
            const double lf = curve_length(Curve(image), 1e-10).value;
            const double lg = curve_length(gamma, 1e-10).value;
            CHECK(lf <= 2.0 * M * lg + 1e-9);
        }
    }
}

TEST_CASE("partition: refinement bookkeeping and diameter") {
    const Partition p = Partition::uniform(4);
    const Partition q = p.bisected();
    CHECK(q.refines(p));
    CHECK_FALSE(p.refines(q));
    CHECK(p.diameter() == doctest::Approx(0.25));
    CHECK(q.diameter() == doctest::Approx(0.125));
    CHECK_THROWS_AS(Partition::of({0.0, 0.5, 0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({0.1, 0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(p.with_tags({0.3, 0.2, 0.6, 0.9}), std::invalid_argument);
}
