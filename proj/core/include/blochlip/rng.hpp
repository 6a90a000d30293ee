#pragma once

#include <cmath>
#include <cstdint>

#include "blochlip/point.hpp"

namespace blochlip {

// SplitMix64. Hand-rolled so that streams are identical across standard
// libraries and platforms; report determinism depends on that.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Box-Muller; one value per call keeps the stream layout obvious.
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

inline Point random_in_ball(SplitMix64& rng, int dim, double radius) {
    while (true) {
        Point p(dim);
        for (int i = 0; i < dim; ++i) p[i] = rng.uniform(-radius, radius);
        if (p.norm() <= radius) return p;
    }
}

inline Point random_unit_vector(SplitMix64& rng, int dim) {
    while (true) {
        Point p(dim);
        for (int i = 0; i < dim; ++i) p[i] = rng.gaussian();
        const double n = p.norm();
        if (n > 1e-12) return (1.0 / n) * p;
    }
}

}  // namespace blochlip
