#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace blochlip {

// Point in R^m with small inline storage (no heap traffic in quadrature and
// graph inner loops). The complex plane is identified with R^2 as (re, im).
class Point {
public:
    static constexpr int kMaxDim = 8;

    Point() = default;

    explicit Point(int dim) : dim_(checked_dim(dim)) { coords_.fill(0.0); }

    Point(std::initializer_list<double> cs) : dim_(checked_dim(static_cast<int>(cs.size()))) {
        int i = 0;
        for (double c : cs) coords_[i++] = c;
        require_finite();
    }

    static Point zero(int dim) { return Point(dim); }

    static Point xy(double x, double y) { return Point{x, y}; }

    static Point from_complex(std::complex<double> z) { return Point{z.real(), z.imag()}; }

    static Point from_vector(const std::vector<double>& cs) {
        Point p(checked_dim(static_cast<int>(cs.size())));
        for (int i = 0; i < p.dim_; ++i) p.coords_[i] = cs[i];
        p.require_finite();
        return p;
    }

    int dim() const { return dim_; }

    double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }

    double norm_sq() const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += coords_[static_cast<std::size_t>(i)] * coords_[static_cast<std::size_t>(i)];
        return s;
    }

    double norm() const { return std::sqrt(norm_sq()); }

    std::complex<double> to_complex() const {
        if (dim_ != 2) throw std::invalid_argument("Point::to_complex: dimension must be 2");
        return {coords_[0], coords_[1]};
    }

    std::vector<double> to_vector() const { return std::vector<double>(coords_.begin(), coords_.begin() + dim_); }

    bool all_finite() const {
        for (int i = 0; i < dim_; ++i)
            if (!std::isfinite(coords_[static_cast<std::size_t>(i)])) return false;
        return true;
    }

    friend Point operator+(const Point& a, const Point& b) {
        check_same_dim(a, b);
        Point r(a.dim_);
        for (int i = 0; i < a.dim_; ++i) r[i] = a[i] + b[i];
        return r;
    }

    friend Point operator-(const Point& a, const Point& b) {
        check_same_dim(a, b);
        Point r(a.dim_);
        for (int i = 0; i < a.dim_; ++i) r[i] = a[i] - b[i];
        return r;
    }

    friend Point operator*(double s, const Point& a) {
        Point r(a.dim_);
        for (int i = 0; i < a.dim_; ++i) r[i] = s * a[i];
        return r;
    }

    // Exact coordinate equality; concat and the piecewise admissible weight
    // rely on this being exact rather than tolerance-based.
    friend bool operator==(const Point& a, const Point& b) {
        if (a.dim_ != b.dim_) return false;
        for (int i = 0; i < a.dim_; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    // Lexicographic order, used only as a deterministic tie-break.
    friend bool lex_less(const Point& a, const Point& b) {
        for (int i = 0; i < a.dim_ && i < b.dim_; ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return a.dim_ < b.dim_;
    }

private:
    static int checked_dim(int dim) {
        if (dim < 1 || dim > kMaxDim)
            throw std::invalid_argument("Point: dimension must be in [1, 8]");
        return dim;
    }

    static void check_same_dim(const Point& a, const Point& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("Point: dimension mismatch");
    }

    void require_finite() const {
        if (!all_finite()) throw std::invalid_argument("Point: coordinates must be finite");
    }

    std::array<double, kMaxDim> coords_{};
    int dim_ = 0;
};

inline double dot(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// (1-t)*a + t*b
inline Point lerp(const Point& a, const Point& b, double t) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lerp: dimension mismatch");
    Point r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
}

}  // namespace blochlip
