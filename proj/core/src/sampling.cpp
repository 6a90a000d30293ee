#include "blochlip/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace blochlip {

namespace {

constexpr std::uint32_t kPrimes[16] = {2,  3,  5,  7,  11, 13, 17, 19,
                                       23, 29, 31, 37, 41, 43, 47, 53};

// Two Halton dimensions per spatial coordinate are needed for pair sampling.
constexpr int kMaxHaltonDim = 16;

}  // namespace

double radical_inverse(std::uint64_t index, std::uint32_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double scale = inv;
    double value = 0.0;
    while (index > 0) {
        value += static_cast<double>(index % base) * scale;
        index /= base;
        scale *= inv;
    }
    return value;
}

HaltonSequence::HaltonSequence(int dim, std::uint64_t start_index) : dim_(dim), index_(start_index) {
    if (dim < 1 || dim > kMaxHaltonDim) throw std::invalid_argument("HaltonSequence: dim out of range");
    if (start_index < 1) throw std::invalid_argument("HaltonSequence: start index must be >= 1");
}

Point HaltonSequence::next_unit() {
    Point p(dim_ <= Point::kMaxDim ? dim_ : Point::kMaxDim);
    if (dim_ > Point::kMaxDim) throw std::invalid_argument("HaltonSequence: dim exceeds Point capacity");
    for (int i = 0; i < dim_; ++i) p[i] = radical_inverse(index_, kPrimes[i]);
    ++index_;
    return p;
}

namespace {

std::uint64_t seed_offset(std::uint64_t seed) { return 1 + seed * 1000003ULL; }

}  // namespace

std::vector<Point> halton_in_ball(int dim, double radius, std::size_t count, std::uint64_t seed) {
    if (!(radius > 0.0)) throw std::invalid_argument("halton_in_ball: radius must be positive");
    HaltonSequence seq(dim, seed_offset(seed));
    std::vector<Point> out;
    out.reserve(count);
    const double r2 = radius * radius;
    while (out.size() < count) {
        Point u = seq.next_unit();
        Point p(dim);
        double s = 0.0;
        for (int i = 0; i < dim; ++i) {
            p[i] = radius * (2.0 * u[i] - 1.0);
            s += p[i] * p[i];
        }
        if (s <= r2) out.push_back(p);
    }
    return out;
}

std::vector<Point> halton_in_box(const Point& lo, const Point& hi, std::size_t count,
                                 std::uint64_t seed) {
    const int dim = lo.dim();
    HaltonSequence seq(dim, seed_offset(seed));
    std::vector<Point> out;
    out.reserve(count);
    while (out.size() < count) {
        Point u = seq.next_unit();
        Point p(dim);
        for (int i = 0; i < dim; ++i) p[i] = lo[i] + (hi[i] - lo[i]) * u[i];
        out.push_back(p);
    }
    return out;
}

std::vector<std::pair<Point, Point>> halton_pairs_in_ball(int dim, double radius,
                                                          std::size_t count, std::uint64_t seed,
                                                          double min_separation) {
    HaltonSequence seq(2 * dim, seed_offset(seed));
    std::vector<std::pair<Point, Point>> out;
    out.reserve(count);
    const double r2 = radius * radius;
    while (out.size() < count) {
        Point u = seq.next_unit();
        Point x(dim), y(dim);
        double sx = 0.0, sy = 0.0;
        for (int i = 0; i < dim; ++i) {
            x[i] = radius * (2.0 * u[i] - 1.0);
            y[i] = radius * (2.0 * u[i + dim] - 1.0);
            sx += x[i] * x[i];
            sy += y[i] * y[i];
        }
        if (sx > r2 || sy > r2) continue;
        if (distance(x, y) < min_separation) continue;
        out.emplace_back(x, y);
    }
    return out;
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, int iters) {
    if (!(hi >= lo)) std::swap(lo, hi);
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    double bx = f1 >= f2 ? x1 : x2;
    double bf = f1 >= f2 ? f1 : f2;
    // Monotone objectives push the optimum onto an endpoint; check both.
    const double fl = f(lo), fh = f(hi);
    if (fl > bf) {
        bx = lo;
        bf = fl;
    }
    if (fh > bf) {
        bx = hi;
        bf = fh;
    }
    return {bx, bf};
}

std::pair<double, double> golden_section_min(const std::function<double(double)>& f, double lo,
                                             double hi, int iters) {
    auto [x, v] = golden_section_max([&](double t) { return -f(t); }, lo, hi, iters);
    return {x, -v};
}

int worker_count() {
    if (const char* env = std::getenv("BLOCHLIP_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<int>(std::min<long>(n, 64));
        return 1;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min<unsigned>(hc, 64));
}

void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::size_t chunk = std::max<std::size_t>(1, n / (static_cast<std::size_t>(workers) * 8));
    auto run = [&]() {
        while (true) {
            const std::size_t begin = cursor.fetch_add(chunk);
            if (begin >= n) return;
            const std::size_t end = std::min(n, begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace blochlip
