#include "eqsp/equispace.hpp"

#include <cmath>
#include <utility>

namespace eqsp {

HFamily::HFamily(Simplex ambient, std::vector<BodyPtr> bodies, double contain_tol)
    : ambient_(std::move(ambient)), bodies_(std::move(bodies)) {
    const int n = ambient_.dim();
    if (static_cast<int>(bodies_.size()) != n + 1)
        throw InvalidFamily("family: expected " + std::to_string(n + 1) + " bodies, got " +
                            std::to_string(bodies_.size()));
    face_check_.reserve(bodies_.size());
    for (int i = 0; i <= n; ++i) {
        if (!bodies_[i]) throw InvalidFamily("family: null body");
        double worst = 0;
        const Face face = ambient_.face(i);
        for (const Vector& v : face.vertices())
            worst = std::max(worst, bodies_[i]->distance(v));
        if (worst > contain_tol)
            throw InvalidFamily("family: face " + std::to_string(i) +
                                " not contained in its body (vertex distance " +
                                std::to_string(worst) + ")");
        face_check_.push_back(worst);
    }
}

EquispaceResult solve(const HFamily& fam, double tol, double feas_tol, long max_iter) {
    const double eff_tol = tol > 0 ? tol : 1e-6 * fam.ambient().diameter();
    const MinMaxResult mm = min_max_distance(fam.bodies(), fam.ambient(),
                                             fam.ambient().barycenter(), eff_tol, feas_tol,
                                             max_iter);
    EquispaceResult res;
    res.eps0 = mm.value;
    res.v = mm.argmin;
    res.distances.reserve(fam.bodies().size());
    for (const BodyPtr& b : fam.bodies()) res.distances.push_back(b->distance(mm.argmin));
    res.covering = mm.value <= eff_tol;
    res.iterations = mm.total_iterations;
    return res;
}

bool is_hfamily(const HFamily& fam, double tol) { return !solve(fam, tol).covering; }

GridValue supinf_check(const HFamily& fam, int grid_depth) {
    return grid_maximin(fam.ambient(), fam.bodies(), grid_depth);
}

CompareResult compare(const HFamily& fam_inner, const HFamily& fam_outer, double tol) {
    const double eff_tol = tol > 0 ? tol : 1e-6 * fam_inner.ambient().diameter();
    if (fam_inner.bodies().size() != fam_outer.bodies().size())
        throw ContainmentViolated("compare: family sizes differ");
    for (std::size_t i = 0; i < fam_inner.bodies().size(); ++i) {
        for (const Vector& p : fam_inner.bodies()[i]->probe_points()) {
            const double d = fam_outer.bodies()[i]->distance(p);
            if (d > eff_tol)
                throw ContainmentViolated("compare: body " + std::to_string(i) +
                                          " probe point escapes the enlarged body by " +
                                          std::to_string(d));
        }
    }
    CompareResult out;
    out.eps_inner = solve(fam_inner, tol).eps0;
    out.eps_outer = solve(fam_outer, tol).eps0;
    out.ordered = out.eps_outer <= out.eps_inner + 2 * eff_tol;
    return out;
}

}  // namespace eqsp
