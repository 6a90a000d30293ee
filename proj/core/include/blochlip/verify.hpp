#pragma once

#include "blochlip/admissible.hpp"
#include "blochlip/seminorm.hpp"

namespace blochlip {

struct VerifyBudgets {
    std::size_t grid_points = 10000;
    std::size_t pairs = 100000;
    double safe_radius = 0.95;
    double slack = 0.05;  // covers sampling sub-optimality of the sup estimates
    std::uint64_t seed = 1;
    bool cross_check = true;
    int top_k = 8;
    int refine_rounds = 6;
    int refine_iters = 48;
};

// Result of checking that the Bloch and Lipschitz numbers agree. Both sides
// are sampled lower bounds of equal suprema, so the report separates the gap
// from one-sided bound violations: a violation count localizes a failure to
// estimator budget vs a genuine inequality breach.
struct EqualityReport {
    SeminormEstimate bloch;
    SeminormEstimate lipschitz;
    double gap = 0.0;  // |B - L| / max(B, L, tiny)
    std::size_t pair_bound_violations = 0;   // W*quotient > B*(1+slack)
    std::size_t point_bound_violations = 0;  // bloch sample > L*(1+slack)
    double slack = 0.05;
};

EqualityReport verify_equality(const Mapping& f, const Weight& omega, const Weight& omega_tilde,
                               const AdmissibleWeight& W, const VerifyBudgets& budgets,
                               const PairObserver& pair_observer = {});

}  // namespace blochlip
