#include "blochlip/metric_check.hpp"

#include <algorithm>
#include <cmath>

#include "blochlip/rng.hpp"

namespace blochlip {

MetricAxiomReport metric_axiom_check(const DistanceFn& dist, const Weight& weight,
                                     double sample_radius, int triples, std::uint64_t seed) {
    MetricAxiomReport report;
    report.triples = triples;
    SplitMix64 rng(seed);
    const int dim = weight.domain.dim;

    // m = min weight over a domain sample plus all triple points.
    double min_w = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 512; ++i) min_w = std::min(min_w, weight(random_in_ball(rng, dim, sample_radius)));

    for (int i = 0; i < triples; ++i) {
        const Point x = random_in_ball(rng, dim, sample_radius);
        const Point y = random_in_ball(rng, dim, sample_radius);
        const Point z = random_in_ball(rng, dim, sample_radius);
        min_w = std::min({min_w, weight(x), weight(y), weight(z)});

        const double dxy = dist(x, y);
        const double dyx = dist(y, x);
        const double dyz = dist(y, z);
        const double dxz = dist(x, z);

        const double sym = std::abs(dxy - dyx);
        if (sym > report.worst_symmetry) {
            report.worst_symmetry = sym;
            report.symmetry_witness_x = x;
            report.symmetry_witness_y = y;
        }
        const double tri = dxz - dxy - dyz;
        if (tri > report.worst_triangle) {
            report.worst_triangle = tri;
            report.triangle_witness_x = x;
            report.triangle_witness_y = y;
            report.triangle_witness_z = z;
        }
        const double lb = min_w * distance(x, y) - dxy;
        report.worst_lower_bound = std::max(report.worst_lower_bound, lb);
    }
    report.min_weight = min_w;
    return report;
}

}  // namespace blochlip
