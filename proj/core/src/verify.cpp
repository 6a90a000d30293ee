#include "blochlip/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace blochlip {

EqualityReport verify_equality(const Mapping& f, const Weight& omega, const Weight& omega_tilde,
                               const AdmissibleWeight& W, const VerifyBudgets& budgets,
                               const PairObserver& pair_observer) {
    SamplePlan sample_plan;
    sample_plan.count = budgets.grid_points;
    sample_plan.seed = budgets.seed;
    sample_plan.safe_radius = budgets.safe_radius;
    sample_plan.top_k = budgets.top_k;
    sample_plan.refine_rounds = budgets.refine_rounds;
    sample_plan.refine_iters = budgets.refine_iters;
    sample_plan.cross_check = budgets.cross_check;

    PairPlan pair_plan;
    pair_plan.count = budgets.pairs;
    pair_plan.seed = budgets.seed + 1;
    pair_plan.safe_radius = budgets.safe_radius;
    pair_plan.top_k = budgets.top_k;
    pair_plan.refine_rounds = budgets.refine_rounds;
    pair_plan.refine_iters = budgets.refine_iters;

    std::vector<double> bloch_samples;
    bloch_samples.reserve(budgets.grid_points);
    std::vector<double> pair_samples;
    pair_samples.reserve(budgets.pairs);

    EqualityReport report;
    report.slack = budgets.slack;
    report.bloch = bloch_number(f, omega, omega_tilde, sample_plan,
                                [&](const Point&, double v) { bloch_samples.push_back(v); });
    report.lipschitz = lipschitz_number(
        f, W, pair_plan,
        [&](const Point& x, const Point& y, double w, double q, double v) {
            pair_samples.push_back(v);
            if (pair_observer) pair_observer(x, y, w, q, v);
        });

    const double b = report.bloch.value;
    const double l = report.lipschitz.value;
    const double scale = std::max({b, l, 1e-300});
    report.gap = std::abs(b - l) / scale;

    const double pair_threshold = b * (1.0 + budgets.slack);
    for (double v : pair_samples)
        if (v > pair_threshold) ++report.pair_bound_violations;
    const double point_threshold = l * (1.0 + budgets.slack);
    for (double v : bloch_samples)
        if (v > point_threshold) ++report.point_bound_violations;
    return report;
}

}  // namespace blochlip
