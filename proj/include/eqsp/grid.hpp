#pragma once

#include <functional>
#include <vector>

#include "eqsp/bodies.hpp"
#include "eqsp/simplex.hpp"

namespace eqsp {

inline constexpr long kDefaultGridCap = 10000000;

// Barycentric lattice of a vertex set: all points sum((k_i/m) v_i) with
// nonnegative integers k_i summing to m. Closed (includes the boundary).
// Enumeration order is lexicographic in (k_1, ..., k_q), which fixes the
// deterministic tie-break for arg results.
class BaryGrid {
public:
    BaryGrid(std::vector<Vector> vertices, int depth, long max_points = kDefaultGridCap);

    long size() const { return size_; }
    int depth() const { return depth_; }
    // Covering-radius bound: every point of the hull is within mesh() of a
    // grid point (lattice cell diameter <= diameter / depth).
    double mesh() const { return mesh_; }

    // Calls fn(point) for every grid point in enumeration order.
    void for_each(const std::function<void(const Vector&)>& fn) const;

    static long count_points(int depth, int vertex_count, long cap);

private:
    std::vector<Vector> vertices_;
    int depth_;
    long size_;
    double mesh_;
};

struct GridValue {
    double value = 0;
    Vector arg;
    double mesh = 0;
};

// Exhaustive max over the grid of min over bodies of the distance.
// The objective is 1-Lipschitz, so |value - sup inf| <= mesh.
GridValue grid_maximin(const Simplex& S, const std::vector<BodyPtr>& bodies, int depth,
                       long max_points = kDefaultGridCap);

// Same with min over the grid of max over bodies.
GridValue grid_minimax(const Simplex& S, const std::vector<BodyPtr>& bodies, int depth,
                       long max_points = kDefaultGridCap);

// Variants over an arbitrary vertex set (used for facet-restricted grids).
GridValue grid_maximin_points(const std::vector<Vector>& vertices,
                              const std::vector<BodyPtr>& bodies, int depth,
                              long max_points = kDefaultGridCap);
GridValue grid_minimax_points(const std::vector<Vector>& vertices,
                              const std::vector<BodyPtr>& bodies, int depth,
                              long max_points = kDefaultGridCap);

// All grid points u with max_i d(u, bodies_i) <= eps0 + slack; used for the
// uniqueness diameter check.
std::vector<Vector> equispace_locus(const Simplex& S, const std::vector<BodyPtr>& bodies,
                                    int depth, double eps0, double slack,
                                    long max_points = kDefaultGridCap);

}  // namespace eqsp
