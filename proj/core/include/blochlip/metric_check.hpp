#pragma once

#include <cstdint>
#include <functional>

#include "blochlip/domain.hpp"
#include "blochlip/point.hpp"
#include "blochlip/weight.hpp"

namespace blochlip {

using DistanceFn = std::function<double(const Point&, const Point&)>;

// Report-only audit of a distance evaluator on sampled triples: symmetry,
// triangle inequality, and the positivity lower bound d(x,y) >= m*|x-y| with
// m the minimum sampled weight.
struct MetricAxiomReport {
    double worst_symmetry = 0.0;       // max |d(x,y) - d(y,x)|
    double worst_triangle = 0.0;       // max d(x,z) - d(x,y) - d(y,z), clamped at 0
    double worst_lower_bound = 0.0;    // max m*|x-y| - d(x,y), clamped at 0
    double min_weight = 0.0;           // the sampled m
    Point symmetry_witness_x, symmetry_witness_y;
    Point triangle_witness_x, triangle_witness_y, triangle_witness_z;
    int triples = 0;

    bool passed(double tol) const {
        return worst_symmetry <= tol && worst_triangle <= tol && worst_lower_bound <= tol;
    }
};

MetricAxiomReport metric_axiom_check(const DistanceFn& dist, const Weight& weight,
                                     double sample_radius, int triples, std::uint64_t seed);

}  // namespace blochlip
