#include "blochlip/geodesic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "blochlip/length.hpp"
#include "blochlip/quadrature.hpp"
#include "blochlip/sampling.hpp"

namespace blochlip {

void SolverConfig::validate(int dim) const {
    if (resolution < 4) throw std::invalid_argument("SolverConfig: resolution must be >= 4");
    if (neighbor_radius < 1 || neighbor_radius > 3)
        throw std::invalid_argument("SolverConfig: neighbor_radius must be in [1,3]");
    if (smoothing_passes < 0) throw std::invalid_argument("SolverConfig: smoothing_passes must be >= 0");
    if (!(tolerance > 0.0)) throw std::invalid_argument("SolverConfig: tolerance must be positive");
    if (dim > 3) throw std::invalid_argument("GeodesicSolver: grid solver supports dimensions 1..3");
}

namespace {

int gcd3(int a, int b, int c) { return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)); }

// Primitive lattice directions within the Chebyshev radius; one per ray
// (collinear longer steps cost exactly the same by segment additivity).
std::vector<std::array<int, 3>> lattice_directions(int dim, int radius) {
    std::vector<std::array<int, 3>> dirs;
    const int lo = -radius, hi = radius;
    for (int dx = lo; dx <= hi; ++dx)
        for (int dy = (dim >= 2 ? lo : 0); dy <= (dim >= 2 ? hi : 0); ++dy)
            for (int dz = (dim >= 3 ? lo : 0); dz <= (dim >= 3 ? hi : 0); ++dz) {
                if (dx == 0 && dy == 0 && dz == 0) continue;
                if (gcd3(dx, dy, dz) != 1) continue;
                dirs.push_back({dx, dy, dz});
            }
    return dirs;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

GeodesicSolver::GeodesicSolver(const DomainDescriptor& domain, Weight weight, SolverConfig config)
    : domain_(domain), weight_(std::move(weight)), cfg_(config) {
    cfg_.validate(domain_.dim);
    switch (domain_.kind) {
        case DomainKind::Ball: {
            const double r = domain_.safe_radius();
            Point lo(domain_.dim), hi(domain_.dim);
            for (int i = 0; i < domain_.dim; ++i) {
                lo[i] = -r;
                hi[i] = r;
            }
            build(lo, hi);
            break;
        }
        case DomainKind::Box:
            build(domain_.lo, domain_.hi);
            break;
        case DomainKind::FullSpace:
            throw std::invalid_argument(
                "GeodesicSolver: FullSpace domains need explicit grid bounds");
    }
}

GeodesicSolver::GeodesicSolver(const DomainDescriptor& domain, Weight weight, SolverConfig config,
                               const Point& grid_lo, const Point& grid_hi)
    : domain_(domain), weight_(std::move(weight)), cfg_(config) {
    cfg_.validate(domain_.dim);
    if (grid_lo.dim() != domain_.dim || grid_hi.dim() != domain_.dim)
        throw std::invalid_argument("GeodesicSolver: grid bounds dimension mismatch");
    build(grid_lo, grid_hi);
}

bool GeodesicSolver::in_grid_region(const Point& p) const {
    if (domain_.kind == DomainKind::Ball) return p.norm() <= domain_.safe_radius() + 1e-12;
    for (int i = 0; i < domain_.dim; ++i)
        if (p[i] < lo_[i] - 1e-12 || p[i] > hi_[i] + 1e-12) return false;
    return true;
}

double GeodesicSolver::segment_cost(const Point& a, const Point& b, double tol) const {
    return segment_weighted_length(weight_, a, b, tol);
}

void GeodesicSolver::build(const Point& lo, const Point& hi) {
    lo_ = lo;
    hi_ = hi;
    const int dim = domain_.dim;
    const int res = cfg_.resolution;
    int shape[3] = {1, 1, 1};
    for (int i = 0; i < dim; ++i) {
        shape[i] = res;
        step_[i] = (hi_[i] - lo_[i]) / static_cast<double>(res - 1);
    }
    diameter_ = distance(lo_, hi_);

    const std::size_t cells =
        static_cast<std::size_t>(shape[0]) * static_cast<std::size_t>(shape[1]) * static_cast<std::size_t>(shape[2]);
    cell_node_.assign(cells, -1);
    auto cell_index = [&](int ix, int iy, int iz) {
        return (static_cast<std::size_t>(iz) * static_cast<std::size_t>(shape[1]) + static_cast<std::size_t>(iy)) *
                   static_cast<std::size_t>(shape[0]) +
               static_cast<std::size_t>(ix);
    };

    for (int iz = 0; iz < shape[2]; ++iz)
        for (int iy = 0; iy < shape[1]; ++iy)
            for (int ix = 0; ix < shape[0]; ++ix) {
                Point p(dim);
                p[0] = lo_[0] + step_[0] * ix;
                if (dim >= 2) p[1] = lo_[1] + step_[1] * iy;
                if (dim >= 3) p[2] = lo_[2] + step_[2] * iz;
                if (!in_grid_region(p)) continue;
                cell_node_[cell_index(ix, iy, iz)] = static_cast<int>(nodes_.size());
                nodes_.push_back(p);
                node_cell_.push_back({ix, iy, iz});
            }
    if (nodes_.empty()) throw SolverError("GeodesicSolver: empty grid over the safe domain");

    const auto dirs = lattice_directions(dim, cfg_.neighbor_radius);

    // Collect directed edges per node; costs are filled in parallel afterwards
    // (deterministic: cost only depends on the endpoints).
    struct RawEdge {
        int from, to;
    };
    std::vector<RawEdge> edges;
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
        const auto& c = node_cell_[static_cast<std::size_t>(id)];
        for (const auto& d : dirs) {
            const int jx = c[0] + d[0], jy = c[1] + d[1], jz = c[2] + d[2];
            if (jx < 0 || jx >= shape[0] || jy < 0 || jy >= shape[1] || jz < 0 || jz >= shape[2]) continue;
            const int to = cell_node_[cell_index(jx, jy, jz)];
            if (to < 0) continue;
            edges.push_back({id, to});
        }
    }
    edge_pairs_ = edges.size() / 2;

    std::vector<double> costs(edges.size());
    parallel_for_index(edges.size(), [&](std::size_t i) {
        const Point& a = nodes_[static_cast<std::size_t>(edges[i].from)];
        const Point& b = nodes_[static_cast<std::size_t>(edges[i].to)];
        costs[i] = segment_cost(a, b, cfg_.tolerance * distance(a, b) / diameter_);
    });

    adj_offset_.assign(nodes_.size() + 1, 0);
    for (const auto& e : edges) ++adj_offset_[static_cast<std::size_t>(e.from) + 1];
    for (std::size_t i = 1; i < adj_offset_.size(); ++i) adj_offset_[i] += adj_offset_[i - 1];
    adj_node_.resize(edges.size());
    adj_cost_.resize(edges.size());
    std::vector<std::size_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::size_t slot = cursor[static_cast<std::size_t>(edges[i].from)]++;
        adj_node_[slot] = edges[i].to;
        adj_cost_[slot] = costs[i];
    }
}

std::vector<int> GeodesicSolver::nearby_nodes(const Point& p) const {
    const int dim = domain_.dim;
    int base[3] = {0, 0, 0};
    int shape[3] = {1, 1, 1};
    for (int i = 0; i < dim; ++i) {
        shape[i] = cfg_.resolution;
        const double u = (p[i] - lo_[i]) / step_[i];
        base[i] = std::clamp(static_cast<int>(std::floor(u)), 0, cfg_.resolution - 1);
    }
    auto cell_index = [&](int ix, int iy, int iz) {
        return (static_cast<std::size_t>(iz) * static_cast<std::size_t>(shape[1]) + static_cast<std::size_t>(iy)) *
                   static_cast<std::size_t>(shape[0]) +
               static_cast<std::size_t>(ix);
    };
    std::vector<int> out;
    const int r = cfg_.neighbor_radius;
    for (int dz = (dim >= 3 ? -r : 0); dz <= (dim >= 3 ? r + 1 : 0); ++dz)
        for (int dy = (dim >= 2 ? -r : 0); dy <= (dim >= 2 ? r + 1 : 0); ++dy)
            for (int dx = -r; dx <= r + 1; ++dx) {
                const int ix = base[0] + dx, iy = base[1] + dy, iz = base[2] + dz;
                if (ix < 0 || ix >= shape[0] || iy < 0 || iy >= shape[1] || iz < 0 || iz >= shape[2]) continue;
                const int id = cell_node_[cell_index(ix, iy, iz)];
                if (id >= 0) out.push_back(id);
            }
    return out;
}

// Golden-section perturbation of interior vertices, coordinate by coordinate,
// after inserting segment midpoints. Works on segment integrals with a cheap
// fixed-order rule; only relative comparisons matter here.
std::vector<Point> GeodesicSolver::smooth_path(std::vector<Point> path, double* improvement) const {
    const int dim = domain_.dim;
    constexpr std::size_t kMaxVertices = 768;
    const double ball_r = domain_.kind == DomainKind::Ball ? domain_.safe_radius() : 0.0;

    auto cheap_cost = [&](const Point& a, const Point& b) {
        if (a == b) return 0.0;
        return distance(a, b) *
               gauss5([&](double t) { return weight_.eval(lerp(a, b, t)); }, 0.0, 1.0);
    };
    auto path_cost = [&](const std::vector<Point>& pts) {
        double s = 0.0;
        for (std::size_t i = 1; i < pts.size(); ++i) s += cheap_cost(pts[i - 1], pts[i]);
        return s;
    };

    auto relax_vertex = [&](std::size_t i) {
        const Point& prev = path[i - 1];
        const Point& next = path[i + 1];
        Point v = path[i];
        const double local = 0.5 * (distance(prev, v) + distance(v, next)) + 0.75 * step_[0];
        for (int c = 0; c < dim; ++c) {
            double lo = -local, hi = local;
            if (domain_.kind == DomainKind::Ball) {
                const double rest = v.norm_sq() - v[c] * v[c];
                if (rest >= ball_r * ball_r) continue;
                const double slab = std::sqrt(ball_r * ball_r - rest);
                lo = std::max(lo, -slab - v[c]);
                hi = std::min(hi, slab - v[c]);
            } else {
                lo = std::max(lo, lo_[c] - v[c]);
                hi = std::min(hi, hi_[c] - v[c]);
            }
            if (!(hi > lo)) continue;
            auto [s, cost] = golden_section_min(
                [&](double off) {
                    Point w = v;
                    w[c] += off;
                    return cheap_cost(prev, w) + cheap_cost(w, next);
                },
                lo, hi, 18);
            (void)cost;
            v[c] += s;
        }
        path[i] = v;
    };

    // Equal-chord resampling: relaxation alone lets vertices clump (total
    // length is flat along the path direction), which freezes kinks between
    // the long leftover segments. Redistributing after every level keeps the
    // chain workable.
    auto resample = [](const std::vector<Point>& pts, std::size_t n) {
        std::vector<double> cum(pts.size(), 0.0);
        for (std::size_t i = 1; i < pts.size(); ++i)
            cum[i] = cum[i - 1] + distance(pts[i - 1], pts[i]);
        const double total = cum.back();
        if (total == 0.0 || n < 3) return pts;
        std::vector<Point> out;
        out.reserve(n);
        out.push_back(pts.front());
        std::size_t seg = 1;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double target = total * static_cast<double>(k) / static_cast<double>(n - 1);
            while (seg + 1 < pts.size() && cum[seg] < target) ++seg;
            const double span = cum[seg] - cum[seg - 1];
            const double u = span > 0.0 ? (target - cum[seg - 1]) / span : 0.0;
            out.push_back(lerp(pts[seg - 1], pts[seg], u));
        }
        out.push_back(pts.back());
        return out;
    };

    // Coarse-to-fine: the global shape (the bow of the geodesic) settles on a
    // short chain where Gauss-Seidel converges in a handful of sweeps, then
    // midpoint insertion restores resolution level by level.
    if (path.size() > 9) path = resample(path, 9);

    double last_delta = 0.0;
    for (int pass = 0; pass <= cfg_.smoothing_passes; ++pass) {
        const double before = path_cost(path);
        const int sweeps = std::max(3, 24 >> pass);
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            // Alternating directions propagate corrections both ways.
            if (sweep % 2 == 0)
                for (std::size_t i = 1; i + 1 < path.size(); ++i) relax_vertex(i);
            else
                for (std::size_t i = path.size() - 2; i >= 1; --i) relax_vertex(i);
        }
        const double after = path_cost(path);
        last_delta = std::max(0.0, before - after);
        if (pass < cfg_.smoothing_passes && path.size() * 2 - 1 <= kMaxVertices)
            path = resample(path, path.size() * 2 - 1);
    }
    if (improvement) *improvement = last_delta;
    return path;
}

GeodesicResult GeodesicSolver::query(const Point& query_a, const Point& query_b) const {
    if (query_a.dim() != domain_.dim || query_b.dim() != domain_.dim)
        throw std::invalid_argument("GeodesicSolver: query dimension mismatch");
    if (!domain_.safe_contains(query_a) || !in_grid_region(query_a))
        throw std::invalid_argument("GeodesicSolver: query point outside safe domain");
    if (!domain_.safe_contains(query_b) || !in_grid_region(query_b))
        throw std::invalid_argument("GeodesicSolver: query point outside safe domain");

    // Canonical endpoint order makes d(x,y) and d(y,x) the same computation;
    // the witness is reversed on the way out when the query was swapped.
    const bool swapped = lex_less(query_b, query_a);
    const Point& x = swapped ? query_b : query_a;
    const Point& y = swapped ? query_a : query_b;

    GeodesicDiagnostics diag;
    diag.nodes = nodes_.size() + 2;
    diag.edges = edge_pairs_;
    diag.smoothing_passes = cfg_.smoothing_passes;

    if (x == y) return GeodesicResult{0.0, Curve({query_a, query_b}, {0.0, 1.0}), diag};

    const int src = static_cast<int>(nodes_.size());
    const int dst = src + 1;
    const double query_tol = cfg_.tolerance * 0.05;

    // Query points become extra nodes joined to nearby grid nodes; distances
    // are exact graph distances between the query nodes.
    std::vector<std::pair<int, double>> src_edges, dst_edges;
    for (int id : nearby_nodes(x))
        src_edges.emplace_back(id, segment_cost(x, nodes_[static_cast<std::size_t>(id)], query_tol));
    for (int id : nearby_nodes(y))
        dst_edges.emplace_back(id, segment_cost(y, nodes_[static_cast<std::size_t>(id)], query_tol));
    if (src_edges.empty() || dst_edges.empty())
        throw SolverError("GeodesicSolver: query point not connectable at this resolution");

    std::vector<double> dist(nodes_.size() + 2, kInf);
    std::vector<int> parent(nodes_.size() + 2, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[static_cast<std::size_t>(src)] = 0.0;
    queue.push({0.0, src});
    std::vector<double> to_dst(nodes_.size(), kInf);
    for (const auto& [id, c] : dst_edges) to_dst[static_cast<std::size_t>(id)] = c;

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        if (u == dst) break;
        if (u == src) {
            for (const auto& [v, c] : src_edges) {
                if (d + c < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = d + c;
                    parent[static_cast<std::size_t>(v)] = src;
                    queue.push({d + c, v});
                }
            }
            continue;
        }
        const auto su = static_cast<std::size_t>(u);
        if (to_dst[su] < kInf && d + to_dst[su] < dist[static_cast<std::size_t>(dst)]) {
            dist[static_cast<std::size_t>(dst)] = d + to_dst[su];
            parent[static_cast<std::size_t>(dst)] = u;
            queue.push({dist[static_cast<std::size_t>(dst)], dst});
        }
        for (std::size_t e = adj_offset_[su]; e < adj_offset_[su + 1]; ++e) {
            const int v = adj_node_[e];
            const double nd = d + adj_cost_[e];
            if (nd < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = nd;
                parent[static_cast<std::size_t>(v)] = u;
                queue.push({nd, v});
            }
        }
    }

    const double graph_distance = dist[static_cast<std::size_t>(dst)];
    if (!(graph_distance < kInf))
        throw SolverError("GeodesicSolver: graph disconnected at this resolution");
    diag.graph_distance = graph_distance;

    std::vector<Point> path;
    for (int v = dst; v != -1; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v == src ? x : (v == dst ? y : nodes_[static_cast<std::size_t>(v)]));
    std::reverse(path.begin(), path.end());

    double improvement = 0.0;
    if (cfg_.smoothing_passes > 0) path = smooth_path(std::move(path), &improvement);

    // Final distance: exact segment integrals along the witness.
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i)
        total += segment_cost(path[i - 1], path[i],
                              cfg_.tolerance * std::max(1e-12, distance(path[i - 1], path[i])) / diameter_);

    // Residual metrication bias after smoothing scales with how much the
    // smoothing had to correct; fold a fraction of that correction into the
    // error bar alongside the last-pass improvement and quadrature budget.
    diag.estimated_error =
        improvement + (1.0 / 3.0) * std::max(0.0, graph_distance - total) + cfg_.tolerance;
    if (swapped) std::reverse(path.begin(), path.end());
    return GeodesicResult{total, Curve(std::move(path)), diag};
}

GeodesicResult weighted_distance(const DomainDescriptor& domain, const Weight& weight,
                                 const Point& x, const Point& y, const SolverConfig& config) {
    if (domain.kind == DomainKind::FullSpace) {
        const int dim = domain.dim;
        Point lo(dim), hi(dim);
        double span = std::max(distance(x, y), 1.0);
        for (int i = 0; i < dim; ++i) {
            lo[i] = std::min(x[i], y[i]) - 0.75 * span;
            hi[i] = std::max(x[i], y[i]) + 0.75 * span;
        }
        GeodesicSolver solver(domain, weight, config, lo, hi);
        return solver.query(x, y);
    }
    GeodesicSolver solver(domain, weight, config);
    return solver.query(x, y);
}

}  // namespace blochlip
