#pragma once

#include <optional>
#include <vector>

#include "eqsp/equispace.hpp"

namespace eqsp {

// An indexed family of convex bodies in the ambient simplex together with the
// face-containment evidence per body and an optional face -> body assignment.
// Bodies that contain no face are recorded as such, not rejected: several of
// the covering checks remain meaningful for them.
class FaceCoveringFamily {
public:
    // assignment: for each face i (0-based), the index of a body required to
    // contain it, or -1 for unassigned. Empty means all unassigned; entries
    // are verified (ContainmentViolated on failure). When faces are left
    // unassigned, the first body found to contain the face (if any) fills in.
    FaceCoveringFamily(Simplex ambient, std::vector<BodyPtr> bodies,
                       std::vector<int> assignment = {}, double contain_tol = 1e-7);

    const Simplex& ambient() const { return ambient_; }
    const std::vector<BodyPtr>& bodies() const { return bodies_; }
    // Face indices contained in each body (face-vertex evidence).
    const std::vector<std::vector<int>>& contained_faces() const { return contained_faces_; }
    // Face i -> body index (or -1).
    const std::vector<int>& assignment() const { return assignment_; }
    bool assignment_total() const;
    // True when every body contains at least one maximal face.
    bool is_face_covering() const;

private:
    Simplex ambient_;
    std::vector<BodyPtr> bodies_;
    std::vector<std::vector<int>> contained_faces_;
    std::vector<int> assignment_;
};

struct CoverReport {
    bool covered = false;
    double mesh = 0;
    std::optional<Vector> witness_uncovered;  // grid point farthest from the union
};

// Grid-approximate covering test: covered iff the grid maximin value is
// <= mesh + tol at the given depth.
CoverReport covers_simplex(const Simplex& S, const std::vector<BodyPtr>& bodies,
                           int depth = 128, double tol = 1e-6);

// Facet-by-facet grid test over each facet's own barycentric lattice.
CoverReport covers_boundary(const Simplex& S, const std::vector<BodyPtr>& bodies,
                            int depth = 128, double tol = 1e-6);

struct FamilyPointResult {
    Vector v;
    double eps0 = 0;
    std::vector<double> distances;  // distance of v to every body
};

// The equally spaced point of the whole family: solves the distinguished
// assigned (n+1)-subfamily and verifies every other body sits at the same
// distance (within 2*tol). Throws HypothesisViolated naming the first
// violating body. Requires at least n+2 bodies and a total assignment.
FamilyPointResult family_equispace_point(const FaceCoveringFamily& fam, double tol = 1e-6);

struct HellyResult {
    bool intersects = false;
    std::optional<Vector> witness;
    std::optional<std::vector<int>> counterexample;  // 0-based body indices
};

// Intersection criterion: enumerates all (n+1)-subfamilies; any one that
// covers the boundary of S but not S itself is a counterexample. If none
// exists the whole family intersects and a witness is produced by Dykstra
// over all bodies. Enumeration is capped (EnumerationCapExceeded).
HellyResult helly_criterion(const FaceCoveringFamily& fam, int depth = 128, double tol = 1e-6,
                            long enum_cap = 1000000);

}  // namespace eqsp
