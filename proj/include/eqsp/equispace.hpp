#pragma once

#include <vector>

#include "eqsp/feasibility.hpp"
#include "eqsp/grid.hpp"

namespace eqsp {

// n+1 closed convex bodies in the ambient simplex, body i containing the
// face opposite vertex i. Containment is checked on face vertices only
// (sufficient by convexity). The non-covering property is computed, not
// stored: see is_hfamily.
class HFamily {
public:
    // Throws InvalidFamily on wrong body count or failed face containment.
    HFamily(Simplex ambient, std::vector<BodyPtr> bodies, double contain_tol = 1e-7);

    const Simplex& ambient() const { return ambient_; }
    const std::vector<BodyPtr>& bodies() const { return bodies_; }
    // Worst face-vertex distance per body, the containment evidence.
    const std::vector<double>& face_check() const { return face_check_; }

private:
    Simplex ambient_;
    std::vector<BodyPtr> bodies_;
    std::vector<double> face_check_;
};

struct EquispaceResult {
    double eps0 = 0;
    Vector v;
    std::vector<double> distances;  // d(v, A^i) per body
    bool covering = false;          // eps0 <= tol
    long iterations = 0;            // total Dykstra cycles across probes
};

// The equally spaced point of the family: eps0 and v from the min-max
// bisection, per-body distances, and the covering flag. tol < 0 selects
// 1e-6 * diameter(ambient).
EquispaceResult solve(const HFamily& fam, double tol = -1.0,
                      double feas_tol = kDefaultFeasTol, long max_iter = kDefaultMaxIter);

// True iff the family's union does not cover the simplex (eps0 > tol).
bool is_hfamily(const HFamily& fam, double tol = -1.0);

// Grid estimate of sup over the simplex of min over bodies of the distance,
// the independent cross-check of eps0.
GridValue supinf_check(const HFamily& fam, int grid_depth);

struct CompareResult {
    double eps_inner = 0;  // eps0 of the smaller family
    double eps_outer = 0;  // eps0 of the enlarged family
    bool ordered = false;  // eps_outer <= eps_inner + 2*tol
};

// Monotonicity evidence for nested families: requires every probe point of
// fam_inner's bodies to lie in the matching fam_outer body (distance <= tol),
// throws ContainmentViolated otherwise; then solves both and reports the
// ordering.
CompareResult compare(const HFamily& fam_inner, const HFamily& fam_outer, double tol = -1.0);

}  // namespace eqsp
