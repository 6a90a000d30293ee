#include "blochlip/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "blochlip/dilatation.hpp"
#include "blochlip/sampling.hpp"

namespace blochlip {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Index order of candidate samples: larger value first, then lexicographic
// witness, then index. Fixing the order makes the reduction independent of
// the worker count.
struct Candidate {
    double value;
    std::size_t index;
};

std::vector<std::size_t> top_candidates(const std::vector<double>& values,
                                        const std::vector<Point>& witnesses, int k) {
    std::vector<std::size_t> order;
    order.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (std::isfinite(values[i])) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        if (witnesses[a] != witnesses[b]) return lex_less(witnesses[a], witnesses[b]);
        return a < b;
    });
    if (order.size() > static_cast<std::size_t>(k)) order.resize(static_cast<std::size_t>(k));
    return order;
}

// Coordinate-ascent refinement inside the ball of radius R: per round, one
// golden-section line search along each coordinate, with the search interval
// clipped to the ball slab and shrunk between rounds.
Point refine_in_ball(const std::function<double(const Point&)>& fn, Point p, double R, int rounds,
                     int iters) {
    auto safe_fn = [&](const Point& q) {
        const double v = fn(q);
        return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
    };
    double width = 0.25 * R;
    for (int round = 0; round < rounds; ++round, width *= 0.25) {
        for (int c = 0; c < p.dim(); ++c) {
            const double rest = p.norm_sq() - p[c] * p[c];
            if (rest >= R * R) continue;
            const double slab = std::sqrt(R * R - rest);
            const double lo = std::max(p[c] - width, -slab);
            const double hi = std::min(p[c] + width, slab);
            if (!(hi > lo)) continue;
            auto [best, value] = golden_section_max(
                [&](double t) {
                    Point q = p;
                    q[c] = t;
                    return safe_fn(q);
                },
                lo, hi, iters);
            (void)value;
            p[c] = best;
        }
    }
    return p;
}

}  // namespace

SeminormEstimate sup_over_ball(const std::function<double(const Point&)>& fn, int dim,
                               const SamplePlan& plan, const SampleObserver& observer) {
    const auto samples = halton_in_ball(dim, plan.safe_radius, plan.count, plan.seed);
    std::vector<double> values(samples.size());
    parallel_for_index(samples.size(), [&](std::size_t i) { values[i] = fn(samples[i]); });

    SeminormEstimate est;
    est.samples_used = samples.size();
    est.witness_x = Point::zero(dim);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (std::isnan(values[i])) {
            ++est.skipped;
            continue;
        }
        if (observer) observer(samples[i], values[i]);
        if (values[i] > best || (values[i] == best && lex_less(samples[i], est.witness_x))) {
            best = values[i];
            est.witness_x = samples[i];
        }
    }
    if (est.skipped == samples.size()) {
        est.value = 0.0;
        return est;
    }
    if (std::isinf(best) && best > 0) {  // +inf: overflow evidence, no refinement
        est.value = best;
        return est;
    }
    est.value = best;

    if (plan.top_k > 0) {
        est.kind = EstimatorKind::Refined;
        for (std::size_t idx : top_candidates(values, samples, plan.top_k)) {
            Point refined =
                refine_in_ball(fn, samples[idx], plan.safe_radius, plan.refine_rounds, plan.refine_iters);
            const double v = fn(refined);
            if (!std::isnan(v) &&
                (v > est.value || (v == est.value && lex_less(refined, est.witness_x)))) {
                est.value = v;
                est.witness_x = refined;
            }
        }
    }
    return est;
}

SeminormEstimate bloch_number(const Mapping& f, const Weight& omega, const Weight& omega_tilde,
                              const SamplePlan& plan, const SampleObserver& observer) {
    auto quantity = [&](const Point& x) -> double {
        const Point fx = f(x);
        double wt;
        if (!fx.all_finite()) {
            // Image overflow: usable only when the target weight has a limit
            // at infinity. A decaying weight kills the sample.
            const double lim = omega_tilde.limit_at_infinity;
            if (lim == 0.0) return kNaN;
            if (!std::isfinite(lim) || !(lim > 0.0))
                throw std::domain_error("bloch_number: mapping overflow under a weight with no limit at infinity");
            wt = lim;
        } else {
            wt = omega_tilde(fx);
        }
        const double ratio = wt / omega(x);
        const double df = local_dilatation(f, x).value;
        const double v = ratio * df;
        return std::isnan(v) ? kNaN : v;
    };

    SeminormEstimate est = sup_over_ball(quantity, f.source.dim, plan, observer);

    if (plan.cross_check && f.has_oracle()) {
        const auto samples = halton_in_ball(f.source.dim, plan.safe_radius, plan.count, plan.seed);
        std::vector<double> gaps(samples.size(), 0.0);
        parallel_for_index(samples.size(), [&](std::size_t i) {
            const auto d = local_dilatation(f, samples[i], {}, /*force_sampled=*/true);
            if (std::isfinite(d.value) && d.value >= 1e-6 && std::isfinite(d.sampled))
                gaps[i] = std::abs(d.sampled - d.value) / d.value;
        });
        est.cross_checked = samples.size();
        est.worst_cross_check_rel = *std::max_element(gaps.begin(), gaps.end());
    }
    return est;
}

SeminormEstimate lipschitz_number(const Mapping& f, const AdmissibleWeight& W, const PairPlan& plan,
                                  const PairObserver& observer) {
    const int dim = f.source.dim;
    const auto pairs =
        halton_pairs_in_ball(dim, plan.safe_radius, plan.count, plan.seed, plan.min_separation);

    struct Term {
        double value = kNaN;
        double weight = 0.0;
        double quotient = 0.0;
    };
    auto evaluate = [&](const Point& x, const Point& y) -> Term {
        Term t;
        const double dx = distance(x, y);
        if (!(dx >= plan.min_separation)) return t;  // coincident after refinement: skipped
        const Point fx = f(x), fy = f(y);
        if (!fx.all_finite() || !fy.all_finite()) return t;  // image overflow: skipped
        t.weight = W(x, y);
        t.quotient = distance(fx, fy) / dx;
        const double v = t.weight * t.quotient;
        t.value = std::isfinite(v) ? v : kNaN;
        return t;
    };

    std::vector<Term> terms(pairs.size());
    parallel_for_index(pairs.size(), [&](std::size_t i) {
        terms[i] = evaluate(pairs[i].first, pairs[i].second);
    });

    SeminormEstimate est;
    est.samples_used = pairs.size();
    est.witness_x = Point::zero(dim);
    est.witness_y = Point::zero(dim);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> values(pairs.size(), kNaN);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (std::isnan(terms[i].value)) {
            ++est.skipped;
            continue;
        }
        values[i] = terms[i].value;
        if (observer)
            observer(pairs[i].first, pairs[i].second, terms[i].weight, terms[i].quotient,
                     terms[i].value);
        if (terms[i].value > best) {
            best = terms[i].value;
            est.witness_x = pairs[i].first;
            est.witness_y = pairs[i].second;
        }
    }
    if (est.skipped == pairs.size()) {
        est.value = 0.0;
        return est;
    }
    est.value = best;

    if (plan.top_k > 0) {
        est.kind = EstimatorKind::Refined;
        // Refine over the 2*dim coordinates of the pair.
        auto pair_fn = [&](const Point& xy) -> double {
            Point x(dim), y(dim);
            for (int c = 0; c < dim; ++c) {
                x[c] = xy[c];
                y[c] = xy[c + dim];
            }
            // Constrain each point to the ball separately.
            if (x.norm() > plan.safe_radius || y.norm() > plan.safe_radius)
                return -std::numeric_limits<double>::infinity();
            const Term t = evaluate(x, y);
            return std::isnan(t.value) ? -std::numeric_limits<double>::infinity() : t.value;
        };
        std::vector<Point> stacked(pairs.size(), Point::zero(2 * dim));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (int c = 0; c < dim; ++c) {
                stacked[i][c] = pairs[i].first[c];
                stacked[i][c + dim] = pairs[i].second[c];
            }
        }
        for (std::size_t idx : top_candidates(values, stacked, plan.top_k)) {
            Point refined = refine_in_ball(pair_fn, stacked[idx], plan.safe_radius * 1.4142135623730951,
                                           plan.refine_rounds, plan.refine_iters);
            const double v = pair_fn(refined);
            if (v > est.value) {
                est.value = v;
                Point x(dim), y(dim);
                for (int c = 0; c < dim; ++c) {
                    x[c] = refined[c];
                    y[c] = refined[c + dim];
                }
                est.witness_x = x;
                est.witness_y = y;
            }
        }
    }
    return est;
}

}  // namespace blochlip
