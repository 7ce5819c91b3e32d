#include "eqsp/covering.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "eqsp/feasibility.hpp"

namespace eqsp {

FaceCoveringFamily::FaceCoveringFamily(Simplex ambient, std::vector<BodyPtr> bodies,
                                       std::vector<int> assignment, double contain_tol)
    : ambient_(std::move(ambient)), bodies_(std::move(bodies)), assignment_(std::move(assignment)) {
    const int n = ambient_.dim();
    if (bodies_.empty()) throw ValidationError("face covering family: no bodies");
    for (const BodyPtr& b : bodies_)
        if (!b) throw ValidationError("face covering family: null body");

    // Face-vertex containment evidence per body.
    contained_faces_.resize(bodies_.size());
    for (std::size_t a = 0; a < bodies_.size(); ++a) {
        for (int i = 0; i <= n; ++i) {
            double worst = 0;
            const Face face = ambient_.face(i);
            for (const Vector& v : face.vertices())
                worst = std::max(worst, bodies_[a]->distance(v));
            if (worst <= contain_tol) contained_faces_[a].push_back(i);
        }
    }

    if (assignment_.empty()) {
        assignment_.assign(n + 1, -1);
        for (int i = 0; i <= n; ++i)
            for (std::size_t a = 0; a < bodies_.size(); ++a)
                if (std::count(contained_faces_[a].begin(), contained_faces_[a].end(), i)) {
                    assignment_[i] = static_cast<int>(a);
                    break;
                }
    } else {
        if (static_cast<int>(assignment_.size()) != n + 1)
            throw ValidationError("face covering family: assignment must list all faces");
        for (int i = 0; i <= n; ++i) {
            const int a = assignment_[i];
            if (a == -1) continue;
            if (a < 0 || a >= static_cast<int>(bodies_.size()))
                throw ValidationError("face covering family: assignment index out of range");
            if (!std::count(contained_faces_[a].begin(), contained_faces_[a].end(), i))
                throw ContainmentViolated("face covering family: face " + std::to_string(i) +
                                          " is not contained in assigned body " +
                                          std::to_string(a));
        }
    }
}

bool FaceCoveringFamily::assignment_total() const {
    return std::none_of(assignment_.begin(), assignment_.end(), [](int a) { return a < 0; });
}

bool FaceCoveringFamily::is_face_covering() const {
    return std::none_of(contained_faces_.begin(), contained_faces_.end(),
                        [](const std::vector<int>& f) { return f.empty(); });
}

CoverReport covers_simplex(const Simplex& S, const std::vector<BodyPtr>& bodies, int depth,
                           double tol) {
    const GridValue gm = grid_maximin(S, bodies, depth);
    CoverReport rep;
    rep.mesh = gm.mesh;
    rep.covered = gm.value <= gm.mesh + tol;
    if (!rep.covered) rep.witness_uncovered = gm.arg;
    return rep;
}

CoverReport covers_boundary(const Simplex& S, const std::vector<BodyPtr>& bodies, int depth,
                            double tol) {
    CoverReport rep;
    rep.covered = true;
    for (int j = 0; j <= S.dim(); ++j) {
        const GridValue gm = grid_maximin_points(S.face(j).vertices(), bodies, depth);
        rep.mesh = std::max(rep.mesh, gm.mesh);
        if (rep.covered && gm.value > gm.mesh + tol) {
            rep.covered = false;
            rep.witness_uncovered = gm.arg;
        }
    }
    return rep;
}

FamilyPointResult family_equispace_point(const FaceCoveringFamily& fam, double tol) {
    const int n = fam.ambient().dim();
    const int count = static_cast<int>(fam.bodies().size());
    if (count < n + 2)
        throw ValidationError("family point: needs at least n+2 bodies");
    if (!fam.assignment_total())
        throw ValidationError("family point: some face has no containing body");
    const double eff_tol = tol > 0 ? tol : 1e-6 * fam.ambient().diameter();

    std::vector<BodyPtr> distinguished;
    distinguished.reserve(n + 1);
    for (int i = 0; i <= n; ++i) distinguished.push_back(fam.bodies()[fam.assignment()[i]]);
    const EquispaceResult base = solve(HFamily(fam.ambient(), distinguished), tol);
    if (base.covering)
        throw InvalidFamily("family point: the distinguished subfamily covers the simplex");

    FamilyPointResult out;
    out.v = base.v;
    out.eps0 = base.eps0;
    out.distances.reserve(count);
    for (int a = 0; a < count; ++a) {
        const double d = fam.bodies()[a]->distance(base.v);
        out.distances.push_back(d);
        const bool is_distinguished =
            std::count(fam.assignment().begin(), fam.assignment().end(), a) > 0;
        if (!is_distinguished && std::abs(d - base.eps0) > 2 * eff_tol)
            throw HypothesisViolated("family point: body " + std::to_string(a) +
                                         " is at distance " + std::to_string(d) +
                                         ", expected " + std::to_string(base.eps0),
                                     a, d);
    }
    return out;
}

namespace {

long binomial_capped(int q, int k, long cap) {
    long double c = 1.0L;
    for (int i = 1; i <= k; ++i) {
        c = c * (q - k + i) / i;
        if (c > static_cast<long double>(cap) * 2) return cap + 1;
    }
    return static_cast<long>(std::llroundl(c));
}

}  // namespace

HellyResult helly_criterion(const FaceCoveringFamily& fam, int depth, double tol, long enum_cap) {
    const Simplex& S = fam.ambient();
    const int n = S.dim();
    const int q = static_cast<int>(fam.bodies().size());

    // Small families: k <= n faces always share a vertex, which is then a
    // common point of any genuinely face covering family.
    if (q <= n) {
        if (fam.is_face_covering()) {
            std::vector<bool> used(n + 1, false);
            for (int a = 0; a < q; ++a) used[fam.contained_faces()[a].front()] = true;
            int j = 0;
            while (used[j]) ++j;
            const Vector witness = S.vertex(j);
            double residual = 0;
            for (const BodyPtr& b : fam.bodies())
                residual = std::max(residual, b->distance(witness));
            if (residual <= tol) return {true, witness, std::nullopt};
        }
        const FeasibilityReport rep = intersect(fam.bodies(), S, S.barycenter());
        if (rep.status == FeasStatus::Undecided)
            throw NonConvergence("helly: intersection run undecided", rep.iterations,
                                 rep.residual);
        if (rep.status == FeasStatus::Feasible) return {true, rep.witness, std::nullopt};
        return {false, std::nullopt, std::nullopt};
    }

    if (binomial_capped(q, n + 1, enum_cap) > enum_cap)
        throw EnumerationCapExceeded("helly: C(" + std::to_string(q) + ", " +
                                     std::to_string(n + 1) + ") subfamilies exceed the cap");

    // Lexicographic enumeration of all (n+1)-subsets.
    std::vector<int> subset(n + 1);
    for (int i = 0; i <= n; ++i) subset[i] = i;
    while (true) {
        std::vector<BodyPtr> sub;
        sub.reserve(n + 1);
        for (int idx : subset) sub.push_back(fam.bodies()[idx]);
        if (covers_boundary(S, sub, depth, tol).covered &&
            !covers_simplex(S, sub, depth, tol).covered)
            return {false, std::nullopt, subset};

        int pos = n;
        while (pos >= 0 && subset[pos] == q - (n + 1) + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i <= n; ++i) subset[i] = subset[i - 1] + 1;
    }

    const FeasibilityReport rep = intersect(fam.bodies(), S, S.barycenter());
    if (rep.status == FeasStatus::Feasible) return {true, rep.witness, std::nullopt};
    if (rep.status == FeasStatus::Undecided)
        throw NonConvergence("helly: intersection run undecided", rep.iterations, rep.residual);
    return {false, std::nullopt, std::nullopt};
}

}  // namespace eqsp
