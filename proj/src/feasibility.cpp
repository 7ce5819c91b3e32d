#include "eqsp/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eqsp/hull.hpp"

namespace eqsp {

namespace {

double max_distance(const std::vector<BodyPtr>& sets, const Vector& x) {
    double r = 0;
    for (const BodyPtr& b : sets) r = std::max(r, b->distance(x));
    return r;
}

// Polyak-step subgradient descent on f(u) = max_i d(u, bodies_i) over the
// ambient simplex, targeting a known lower bound of the minimum. Returns the
// best iterate seen; never worse than the start.
struct PolishResult {
    Vector point;
    double value;
};

PolishResult polyak_minimize(const std::vector<BodyPtr>& bodies,
                             const std::vector<Vector>& ambient_vertices, const Vector& start,
                             double target, int iterations) {
    Vector u = start;
    PolishResult best{start, max_distance(bodies, start)};
    for (int it = 0; it < iterations; ++it) {
        double f = 0;
        std::size_t argmax = 0;
        for (std::size_t i = 0; i < bodies.size(); ++i) {
            const double d = bodies[i]->distance(u);
            if (d > f) {
                f = d;
                argmax = i;
            }
        }
        if (f < best.value) {
            best.value = f;
            best.point = u;
        }
        if (f <= target + 1e-18) break;
        const Vector g = u - bodies[argmax]->project(u);
        const double glen = g.norm();
        if (glen < 1e-15) break;
        u = project_onto_hull(ambient_vertices, u - ((f - target) / glen) * g);
    }
    return best;
}

}  // namespace

FeasibilityReport intersect(const std::vector<BodyPtr>& bodies, const Simplex& ambient,
                            const Vector& start, double feas_tol, long max_iter) {
    if (bodies.empty()) throw ValidationError("intersect: empty body list");
    if (start.size() != ambient.dim())
        throw DimensionMismatch("intersect: start point has wrong dimension");

    std::vector<BodyPtr> sets = bodies;
    sets.push_back(std::make_shared<VPolytope>(ambient.vertices()));
    const std::size_t num_sets = sets.size();

    Vector x = start;
    std::vector<Vector> corr(num_sets, Vector::Zero(start.size()));

    double prev_res = std::numeric_limits<double>::infinity();
    double res = prev_res;
    int stable = 0;

    // Residual snapshots for the geometric limit extrapolation.
    constexpr long kWindow = 128;
    double snap[3] = {0, 0, 0};
    int snaps = 0;

    for (long cycle = 1; cycle <= max_iter; ++cycle) {
        for (std::size_t k = 0; k < num_sets; ++k) {
            const Vector z = x + corr[k];
            Vector projected = sets[k]->project(z);
            corr[k] = z - projected;
            x = std::move(projected);
        }
        res = max_distance(sets, x);
        if (res <= feas_tol) return {FeasStatus::Feasible, x, res, cycle};

        // Rule 1: the residual has stopped moving outright. Transient
        // plateaus happen at active-set switches, so the per-cycle
        // stabilization has to persist before it counts.
        if (std::isfinite(prev_res)) {
            const double rel = std::abs(res - prev_res) / std::max(res, 1e-300);
            if (rel < 1e-12) {
                if (++stable >= 50) return {FeasStatus::Infeasible, x, res, cycle};
            } else {
                stable = 0;
            }
        }
        prev_res = res;

        // Rule 2: Dykstra residuals decay geometrically toward their limit,
        // so an Aitken extrapolation over equally spaced snapshots detects a
        // limit above feas_tol long before rule 1 can.
        if (cycle % kWindow == 0) {
            snap[0] = snap[1];
            snap[1] = snap[2];
            snap[2] = res;
            if (++snaps >= 3 && res > 2 * feas_tol) {
                // Noisy floor: no meaningful drift across two whole windows.
                if (std::abs(snap[0] - snap[2]) <= 1e-9 * snap[2])
                    return {FeasStatus::Infeasible, x, res, cycle};
                if (snap[0] >= snap[1] && snap[1] >= snap[2]) {
                    const double d1 = snap[0] - snap[1];
                    const double d2 = snap[1] - snap[2];
                    if (d2 > 0 && d2 < d1) {
                        const double ratio = d2 / d1;
                        const double limit = snap[2] - d2 * ratio / (1 - ratio);
                        const bool settled = snap[2] - limit < 0.25 * limit;
                        if (limit > 2 * feas_tol && settled)
                            return {FeasStatus::Infeasible, x, res, cycle};
                    }
                }
            }
        }
    }
    return {FeasStatus::Undecided, x, res, max_iter};
}

MinMaxResult min_max_distance(const std::vector<BodyPtr>& bodies, const Simplex& ambient,
                              const Vector& start, double tol, double feas_tol, long max_iter) {
    if (bodies.empty()) throw ValidationError("min_max_distance: empty body list");
    if (tol <= 0) tol = 1e-6 * ambient.diameter();

    const auto objective = [&](const Vector& u) { return max_distance(bodies, u); };

    MinMaxResult result;
    double lo = 0;
    double hi = objective(start);  // start witnesses feasibility at its own value
    Vector witness = start;
    int stalls = 0;
    const long probe_cap = std::min<long>(max_iter, 20000);

    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        std::vector<BodyPtr> hulls;
        hulls.reserve(bodies.size());
        for (const BodyPtr& b : bodies) hulls.push_back(epsilon_hull(b, mid));
        const FeasibilityReport rep = intersect(hulls, ambient, start, feas_tol, probe_cap);
        result.probes.push_back({mid, rep.status, rep.iterations, rep.residual});
        result.total_iterations += rep.iterations;
        if (rep.status == FeasStatus::Feasible) {
            hi = mid;
            witness = rep.witness;
            stalls = 0;
        } else if (rep.status == FeasStatus::Infeasible) {
            lo = mid;
            stalls = 0;
        } else {
            // Undecided probe (near-tangent regime). The iterate still
            // certifies an upper bracket at its own objective value, and a
            // short subgradient descent tightens it further.
            const Vector y = project_onto_hull(ambient.vertices(), rep.witness);
            const PolishResult polished =
                polyak_minimize(bodies, ambient.vertices(), y, lo, 200);
            if (polished.value < hi - 0.05 * tol) {
                hi = polished.value;
                witness = polished.point;
                stalls = 0;
            } else if (++stalls >= 3) {
                throw BisectionStalled(
                    "min_max_distance: undecided feasibility probe at eps = " +
                    std::to_string(mid) + " (residual " + std::to_string(rep.residual) +
                    " after " + std::to_string(rep.iterations) + " cycles)");
            }
        }
    }

    // Final polish toward the equally spaced point; keeps the best iterate,
    // so it can only improve the witness.
    const PolishResult final_polish =
        polyak_minimize(bodies, ambient.vertices(), witness, lo, 60);
    result.value = 0.5 * (lo + hi);
    result.argmin = final_polish.point;
    result.lo = lo;
    result.hi = hi;
    return result;
}

}  // namespace eqsp
