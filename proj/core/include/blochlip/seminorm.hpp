#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "blochlip/admissible.hpp"
#include "blochlip/mapping.hpp"
#include "blochlip/weight.hpp"

namespace blochlip {

enum class EstimatorKind { Grid, Refined };

// Sampled supremum estimate: value attained at the recorded witness. Always a
// lower bound of the true supremum; skipped counts samples dropped because a
// factor overflowed or a pair collapsed.
struct SeminormEstimate {
    double value = 0.0;
    Point witness_x;
    std::optional<Point> witness_y;
    std::size_t samples_used = 0;
    EstimatorKind kind = EstimatorKind::Grid;
    std::size_t skipped = 0;
    // Oracle-vs-finite-difference cross-check (worst relative gap); only
    // populated when the plan requests it and the mapping has an oracle.
    double worst_cross_check_rel = 0.0;
    std::size_t cross_checked = 0;
};

// Halton scan of the safe ball followed by coordinate-wise golden-section
// refinement of the top-K samples.
struct SamplePlan {
    std::size_t count = 4000;
    std::uint64_t seed = 1;
    double safe_radius = 0.95;
    int top_k = 8;
    int refine_rounds = 6;
    int refine_iters = 48;
    bool cross_check = false;
};

struct PairPlan {
    std::size_t count = 20000;
    std::uint64_t seed = 1;
    double safe_radius = 0.95;
    int top_k = 8;
    int refine_rounds = 6;
    int refine_iters = 48;
    double min_separation = 1e-9;
};

using SampleObserver = std::function<void(const Point&, double value)>;
using PairObserver =
    std::function<void(const Point&, const Point&, double weight, double quotient, double value)>;

// Generic sup estimator over the safe ball; shared by the seminorm estimators
// and the classification sweeps. Non-finite sample values are recorded as
// +inf in the estimate (overflow evidence); NaN samples are skipped.
SeminormEstimate sup_over_ball(const std::function<double(const Point&)>& fn, int dim,
                               const SamplePlan& plan, const SampleObserver& observer = {});

// Bloch number  B_f = sup_x  wt(f(x))/w(x) * d_f(x), sampled and refined.
// When f(x) overflows and the target weight decays at infinity the sample
// contributes 0 (and is counted as skipped).
SeminormEstimate bloch_number(const Mapping& f, const Weight& omega, const Weight& omega_tilde,
                              const SamplePlan& plan, const SampleObserver& observer = {});

// Lipschitz number  L_f = sup_{x != y}  W(x,y) * d_Y(f(x),f(y)) / d_X(x,y).
SeminormEstimate lipschitz_number(const Mapping& f, const AdmissibleWeight& W, const PairPlan& plan,
                                  const PairObserver& observer = {});

}  // namespace blochlip
