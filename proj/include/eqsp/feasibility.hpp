#pragma once

#include <vector>

#include "eqsp/bodies.hpp"
#include "eqsp/simplex.hpp"

namespace eqsp {

enum class FeasStatus { Feasible, Infeasible, Undecided };

struct FeasibilityReport {
    FeasStatus status = FeasStatus::Undecided;
    Vector witness;      // iterate at exit; a certified witness when Feasible
    double residual = 0; // max over sets (ambient included) of distance to witness
    long iterations = 0; // full Dykstra cycles run
};

inline constexpr double kDefaultFeasTol = 1e-7;
inline constexpr long kDefaultMaxIter = 200000;

// Decides nonemptiness of the intersection of the bodies within the ambient
// simplex by Dykstra's cyclic corrected projections started at `start`.
// Feasible when the max-distance residual falls below feas_tol; Infeasible
// when the residual stabilizes (relative change < 1e-12 over a full cycle)
// above feas_tol; Undecided at max_iter cycles.
FeasibilityReport intersect(const std::vector<BodyPtr>& bodies, const Simplex& ambient,
                            const Vector& start, double feas_tol = kDefaultFeasTol,
                            long max_iter = kDefaultMaxIter);

struct ProbeRecord {
    double eps;
    FeasStatus status;
    long iterations;
    double residual;
};

struct MinMaxResult {
    double value = 0;  // midpoint of the final bracket
    Vector argmin;     // witness of the eps-hull intersection at the upper bracket
    double lo = 0, hi = 0;
    std::vector<ProbeRecord> probes;
    long total_iterations = 0;
};

// min over the ambient simplex of max over bodies of the distance, located by
// bisection on eps over the eps-hull intersections. tol < 0 selects the
// default 1e-6 * diameter(ambient). Throws BisectionStalled when an Undecided
// probe prevents any bracket progress.
MinMaxResult min_max_distance(const std::vector<BodyPtr>& bodies, const Simplex& ambient,
                              const Vector& start, double tol = -1.0,
                              double feas_tol = kDefaultFeasTol, long max_iter = kDefaultMaxIter);

}  // namespace eqsp
