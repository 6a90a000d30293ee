#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "blochlip/point.hpp"

namespace blochlip {

// --- Halton low-discrepancy sequence ----------------------------------------

double radical_inverse(std::uint64_t index, std::uint32_t base);

// Points of the Halton sequence in [0,1)^dim starting at start_index (>= 1).
class HaltonSequence {
public:
    HaltonSequence(int dim, std::uint64_t start_index = 1);
    Point next_unit();

private:
    int dim_;
    std::uint64_t index_;
};

// count Halton points inside the ball of the given radius (rejection from the
// enclosing box; deterministic for a fixed seed, which offsets the sequence).
std::vector<Point> halton_in_ball(int dim, double radius, std::size_t count, std::uint64_t seed);

std::vector<Point> halton_in_box(const Point& lo, const Point& hi, std::size_t count,
                                 std::uint64_t seed);

// Pairs (x, y), both inside the ball, separated by at least min_separation.
std::vector<std::pair<Point, Point>> halton_pairs_in_ball(int dim, double radius,
                                                          std::size_t count, std::uint64_t seed,
                                                          double min_separation = 1e-12);

// --- 1-D golden-section search ----------------------------------------------

// Maximize f on [lo, hi]; interval endpoints are also evaluated. Returns
// (argmax, max). Deterministic, fixed iteration count.
std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, int iters);

std::pair<double, double> golden_section_min(const std::function<double(double)>& f, double lo,
                                             double hi, int iters);

// --- deterministic worker pool ----------------------------------------------

// Worker count: BLOCHLIP_THREADS when set (clamped to [1,64]), otherwise the
// hardware concurrency. Results never depend on it: work items are written to
// per-index slots and reduced in index order.
int worker_count();

// Runs fn(i) for i in [0, n) on the worker pool. fn must only touch state
// owned by index i. Exceptions are captured and rethrown on the caller.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace blochlip
