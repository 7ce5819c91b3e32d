#include "eqsp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eqsp {

long BaryGrid::count_points(int depth, int vertex_count, long cap) {
    // Compositions of depth into vertex_count nonnegative parts.
    long double c = 1.0L;
    for (int i = 1; i < vertex_count; ++i) {
        c = c * (depth + i) / i;
        if (c > static_cast<long double>(cap) * 2) return cap + 1;
    }
    return static_cast<long>(std::llroundl(c));
}

BaryGrid::BaryGrid(std::vector<Vector> vertices, int depth, long max_points)
    : vertices_(std::move(vertices)), depth_(depth) {
    if (vertices_.empty()) throw ValidationError("grid: empty vertex list");
    if (depth_ < 1) throw ValidationError("grid: depth must be >= 1");
    const Eigen::Index n = vertices_.front().size();
    for (const Vector& v : vertices_)
        if (v.size() != n) throw DimensionMismatch("grid: mixed vertex dimensions");
    size_ = count_points(depth_, static_cast<int>(vertices_.size()), max_points);
    if (size_ > max_points)
        throw GridTooLarge("grid: depth " + std::to_string(depth_) + " over " +
                           std::to_string(vertices_.size()) + " vertices exceeds the point cap");
    mesh_ = diameter_of(vertices_) / depth_;
}

void BaryGrid::for_each(const std::function<void(const Vector&)>& fn) const {
    const std::size_t q = vertices_.size();
    const Eigen::Index n = vertices_.front().size();
    std::vector<int> counts(q, 0);
    Vector point(n);
    const double inv = 1.0 / depth_;

    // Lexicographic enumeration of (k_1, ..., k_q), sum = depth.
    const std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos + 1 == q) {
            counts[pos] = rem;
            point.setZero();
            for (std::size_t i = 0; i < q; ++i)
                if (counts[i] != 0) point += (counts[i] * inv) * vertices_[i];
            fn(point);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            counts[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, depth_);
}

namespace {

GridValue grid_extremum(const std::vector<Vector>& vertices, const std::vector<BodyPtr>& bodies,
                        int depth, long max_points, bool maximin) {
    if (bodies.empty()) throw ValidationError("grid oracle: empty body list");
    BaryGrid grid(vertices, depth, max_points);
    GridValue out;
    out.mesh = grid.mesh();
    double best = maximin ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
    Vector arg;
    grid.for_each([&](const Vector& u) {
        double val;
        if (maximin) {
            val = std::numeric_limits<double>::infinity();
            for (const BodyPtr& b : bodies) val = std::min(val, b->distance(u));
            if (val > best) {
                best = val;
                arg = u;
            }
        } else {
            val = 0;
            for (const BodyPtr& b : bodies) val = std::max(val, b->distance(u));
            if (val < best) {
                best = val;
                arg = u;
            }
        }
    });
    out.value = best;
    out.arg = arg;
    return out;
}

}  // namespace

GridValue grid_maximin_points(const std::vector<Vector>& vertices,
                              const std::vector<BodyPtr>& bodies, int depth, long max_points) {
    return grid_extremum(vertices, bodies, depth, max_points, true);
}

GridValue grid_minimax_points(const std::vector<Vector>& vertices,
                              const std::vector<BodyPtr>& bodies, int depth, long max_points) {
    return grid_extremum(vertices, bodies, depth, max_points, false);
}

GridValue grid_maximin(const Simplex& S, const std::vector<BodyPtr>& bodies, int depth,
                       long max_points) {
    return grid_extremum(S.vertices(), bodies, depth, max_points, true);
}

GridValue grid_minimax(const Simplex& S, const std::vector<BodyPtr>& bodies, int depth,
                       long max_points) {
    return grid_extremum(S.vertices(), bodies, depth, max_points, false);
}

std::vector<Vector> equispace_locus(const Simplex& S, const std::vector<BodyPtr>& bodies,
                                    int depth, double eps0, double slack, long max_points) {
    if (bodies.empty()) throw ValidationError("equispace_locus: empty body list");
    BaryGrid grid(S.vertices(), depth, max_points);
    std::vector<Vector> locus;
    grid.for_each([&](const Vector& u) {
        double val = 0;
        for (const BodyPtr& b : bodies) val = std::max(val, b->distance(u));
        if (val <= eps0 + slack) locus.push_back(u);
    });
    return locus;
}

}  // namespace eqsp
