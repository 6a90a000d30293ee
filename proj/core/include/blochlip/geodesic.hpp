#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "blochlip/curve.hpp"
#include "blochlip/domain.hpp"
#include "blochlip/weight.hpp"

namespace blochlip {

// Numerical failure of the geodesic machinery (disconnected graph, empty
// grid). Distinct from precondition violations so callers can map it to a
// non-convergence exit status.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverConfig {
    int resolution = 64;       // grid nodes per axis
    int neighbor_radius = 2;   // Chebyshev radius of lattice neighbors (16-connectivity in 2-D)
    int smoothing_passes = 4;  // midpoint insertion + local perturbation rounds
    double tolerance = 1e-6;   // path-level quadrature budget

    void validate(int dim) const;
};

struct GeodesicDiagnostics {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    int smoothing_passes = 0;
    double graph_distance = 0.0;    // before smoothing
    double estimated_error = 0.0;   // last smoothing improvement + quadrature budget
};

// Upper bound on the weighted distance together with a feasible witness curve
// whose weighted length equals the distance within estimated_error.
struct GeodesicResult {
    double distance = 0.0;
    Curve witness;
    GeodesicDiagnostics diag;
};

// Uniform grid over the safe domain, edges to nearby lattice neighbors with
// exact segment integrals as costs, shortest path by Dijkstra, then local
// path smoothing. Built once, immutable, safe for concurrent queries.
class GeodesicSolver {
public:
    // Ball and Box domains carry their own bounds.
    GeodesicSolver(const DomainDescriptor& domain, Weight weight, SolverConfig config = {});
    // FullSpace domains need explicit grid bounds.
    GeodesicSolver(const DomainDescriptor& domain, Weight weight, SolverConfig config,
                   const Point& grid_lo, const Point& grid_hi);

    // Shortest weighted path between query points (inserted as extra nodes
    // joined to nearby grid nodes). Throws std::invalid_argument for points
    // outside the safe domain, SolverError when no path exists.
    GeodesicResult query(const Point& x, const Point& y) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_pairs_; }

private:
    void build(const Point& lo, const Point& hi);
    bool in_grid_region(const Point& p) const;
    Point clamp_to_region_interval(const Point& v, int coord, double* lo, double* hi) const;
    std::vector<int> nearby_nodes(const Point& p) const;
    double segment_cost(const Point& a, const Point& b, double tol) const;
    std::vector<Point> smooth_path(std::vector<Point> path, double* improvement) const;

    DomainDescriptor domain_;
    Weight weight_;
    SolverConfig cfg_;

    Point lo_, hi_;
    double step_[Point::kMaxDim] = {0};
    double diameter_ = 1.0;
    std::vector<int> cell_node_;   // dense cell index -> node id (or -1)
    std::vector<Point> nodes_;
    std::vector<std::array<int, 3>> node_cell_;
    std::vector<std::size_t> adj_offset_;
    std::vector<int> adj_node_;
    std::vector<double> adj_cost_;
    std::size_t edge_pairs_ = 0;
};

// Convenience wrapper: builds a solver for the query and runs it. For
// FullSpace domains the grid box is derived from the query pair.
GeodesicResult weighted_distance(const DomainDescriptor& domain, const Weight& weight,
                                 const Point& x, const Point& y, const SolverConfig& config = {});

}  // namespace blochlip
