#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqsp/simplex.hpp"

namespace eqsp {

// Exact description of a body as conv(generators) fattened by a ball of the
// given radius. Projection onto such a set is closed-form on top of the hull
// projection, so every variant that can produce one projects exactly.
struct HullForm {
    std::vector<Vector> generators;
    double radius = 0;
};

// A closed convex set exposed through its exact nearest-point map. Bodies are
// immutable and shared by const pointer; projection and distance are pure.
class Body {
public:
    virtual ~Body() = default;

    // Unique nearest point of the body to u.
    virtual Vector project(const Vector& u) const = 0;

    // ||u - project(u)|| unless a variant has a cheaper exact formula.
    virtual double distance(const Vector& u) const;

    virtual std::string kind() const = 0;

    // Finite set of points of the body used as containment-probing evidence
    // (generators, vertices, sampled boundary points). May be empty when the
    // variant has no natural finite description.
    virtual std::vector<Vector> probe_points() const { return {}; }

    // Structured form when the body is exactly a fattened polytope.
    virtual std::optional<HullForm> hull_form() const { return std::nullopt; }
};

using BodyPtr = std::shared_ptr<const Body>;

class VPolytope : public Body {
public:
    explicit VPolytope(std::vector<Vector> generators);

    Vector project(const Vector& u) const override;
    std::string kind() const override { return "vpolytope"; }
    std::vector<Vector> probe_points() const override { return generators_; }
    std::optional<HullForm> hull_form() const override { return HullForm{generators_, 0.0}; }

    const std::vector<Vector>& generators() const { return generators_; }

private:
    std::vector<Vector> generators_;
};

class Ball : public Body {
public:
    Ball(Vector center, double radius);

    Vector project(const Vector& u) const override;
    double distance(const Vector& u) const override;
    std::string kind() const override { return "ball"; }
    std::vector<Vector> probe_points() const override;
    std::optional<HullForm> hull_form() const override {
        return HullForm{{center_}, radius_};
    }

    const Vector& center() const { return center_; }
    double radius() const { return radius_; }

private:
    Vector center_;
    double radius_;
};

// Intersection of halfspaces {x : n_k . x <= o_k}. Normals are stored
// normalized. Projection runs Dykstra over the closed-form halfspace
// projections; the set is assumed nonempty (families always conjoin the
// ambient simplex in feasibility).
class HalfspaceSet : public Body {
public:
    HalfspaceSet(std::vector<Vector> normals, std::vector<double> offsets);

    Vector project(const Vector& u) const override;
    std::string kind() const override { return "halfspaces"; }

    const std::vector<Vector>& normals() const { return normals_; }
    const std::vector<double>& offsets() const { return offsets_; }

private:
    std::vector<Vector> normals_;
    std::vector<double> offsets_;
};

// A maximal face of the ambient simplex viewed as a body.
class FaceBody : public Body {
public:
    explicit FaceBody(Face face);

    Vector project(const Vector& u) const override;
    std::string kind() const override { return "face"; }
    std::vector<Vector> probe_points() const override { return face_.vertices(); }
    std::optional<HullForm> hull_form() const override {
        return HullForm{face_.vertices(), 0.0};
    }

    const Face& face() const { return face_; }

private:
    Face face_;
};

// Outward fattening of an inner body: distance law max(d(., inner) - eps, 0).
class EpsilonHull : public Body {
public:
    EpsilonHull(BodyPtr inner, double eps);

    Vector project(const Vector& u) const override;
    double distance(const Vector& u) const override;
    std::string kind() const override { return "epsilon-hull"; }
    std::vector<Vector> probe_points() const override { return inner_->probe_points(); }
    std::optional<HullForm> hull_form() const override;

    const BodyPtr& inner() const { return inner_; }
    double eps() const { return eps_; }

private:
    BodyPtr inner_;
    double eps_;
};

// Minkowski combination (1-t) * face + t * outer for t in [0,1].
// When the outer body has a fattened-hull form, the blend inherits one
// ((1-t)F + t(P + rB) = [(1-t)F + tP] + trB) and projection is exact through
// the product polytope; otherwise it runs alternating exact block
// minimization over (s, c).
class Blend : public Body {
public:
    // Does not check face containment in outer; use the blend() factory for
    // the checked construction.
    Blend(double t, Face face, BodyPtr outer);

    Vector project(const Vector& u) const override;
    double distance(const Vector& u) const override;
    std::string kind() const override { return "blend"; }
    std::vector<Vector> probe_points() const override;
    std::optional<HullForm> hull_form() const override;

    double t() const { return t_; }
    const Face& face() const { return face_; }
    const BodyPtr& outer() const { return outer_; }

    static constexpr long kAltCap = 10000;
    static constexpr double kAltTol = 1e-10;

private:
    Vector alternating_project(const Vector& u) const;

    double t_;
    Face face_;
    BodyPtr outer_;
    std::optional<HullForm> form_;  // set when the outer contributes one
};

// Wrapper factories matching the construction contracts.

// Throws NegativeEpsilon.
BodyPtr epsilon_hull(BodyPtr inner, double eps);

// Checks that every face vertex lies in outer (distance <= contain_tol);
// throws FaceNotContained otherwise, and std::invalid_argument style
// ValidationError when t is outside [0,1].
BodyPtr blend(const Face& face, BodyPtr outer, double t, double contain_tol = 1e-7);

}  // namespace eqsp
