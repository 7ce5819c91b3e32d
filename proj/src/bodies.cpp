#include "eqsp/bodies.hpp"

#include <cmath>
#include <utility>

#include "eqsp/hull.hpp"

namespace eqsp {

double Body::distance(const Vector& u) const { return (u - project(u)).norm(); }

VPolytope::VPolytope(std::vector<Vector> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw ValidationError("vpolytope: needs at least one generator");
    const Eigen::Index n = generators_.front().size();
    for (const Vector& g : generators_) {
        if (g.size() != n) throw DimensionMismatch("vpolytope: mixed generator dimensions");
        if (!g.allFinite()) throw ValidationError("vpolytope: non-finite generator");
    }
}

Vector VPolytope::project(const Vector& u) const { return project_onto_hull(generators_, u); }

Ball::Ball(Vector center, double radius) : center_(std::move(center)), radius_(radius) {
    if (radius_ < 0) throw ValidationError("ball: negative radius");
    if (!center_.allFinite()) throw ValidationError("ball: non-finite center");
}

Vector Ball::project(const Vector& u) const {
    const Vector diff = u - center_;
    const double d = diff.norm();
    if (d <= radius_) return u;
    return center_ + (radius_ / d) * diff;
}

double Ball::distance(const Vector& u) const {
    return std::max((u - center_).norm() - radius_, 0.0);
}

std::vector<Vector> Ball::probe_points() const {
    std::vector<Vector> pts{center_};
    if (radius_ > 0) {
        for (Eigen::Index k = 0; k < center_.size(); ++k) {
            Vector axis = Vector::Zero(center_.size());
            axis(k) = radius_;
            pts.push_back(center_ + axis);
            pts.push_back(center_ - axis);
        }
    }
    return pts;
}

HalfspaceSet::HalfspaceSet(std::vector<Vector> normals, std::vector<double> offsets)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
    if (normals_.size() != offsets_.size())
        throw DimensionMismatch("halfspaces: normals/offsets count mismatch");
    if (normals_.empty()) throw ValidationError("halfspaces: empty constraint list");
    const Eigen::Index n = normals_.front().size();
    for (std::size_t k = 0; k < normals_.size(); ++k) {
        if (normals_[k].size() != n) throw DimensionMismatch("halfspaces: mixed dimensions");
        const double len = normals_[k].norm();
        if (!(len > 0) || !normals_[k].allFinite())
            throw ValidationError("halfspaces: zero or non-finite normal");
        normals_[k] /= len;
        offsets_[k] /= len;
    }
}

Vector HalfspaceSet::project(const Vector& u) const {
    // Dykstra over the closed-form halfspace projections.
    const long cap = 100000;
    const double scale = 1.0 + u.norm();
    const std::size_t m = normals_.size();
    Vector x = u;
    std::vector<Vector> corr(m, Vector::Zero(u.size()));
    double movement = 0;
    int settled = 0;
    for (long cycle = 0; cycle < cap; ++cycle) {
        const Vector before = x;
        for (std::size_t k = 0; k < m; ++k) {
            const Vector z = x + corr[k];
            const double viol = normals_[k].dot(z) - offsets_[k];
            const Vector proj = viol > 0 ? Vector(z - viol * normals_[k]) : z;
            corr[k] = z - proj;
            x = proj;
        }
        movement = (x - before).norm();
        settled = movement <= 1e-16 * scale ? settled + 1 : 0;
        if (settled >= 3) {
            double worst = 0;
            for (std::size_t k = 0; k < m; ++k)
                worst = std::max(worst, normals_[k].dot(x) - offsets_[k]);
            if (worst <= 1e-10 * scale) return x;
        }
    }
    throw NonConvergence("halfspace projection: Dykstra cap reached", cap, movement);
}

FaceBody::FaceBody(Face face) : face_(std::move(face)) {}

Vector FaceBody::project(const Vector& u) const {
    return project_onto_hull(face_.vertices(), u);
}

EpsilonHull::EpsilonHull(BodyPtr inner, double eps) : inner_(std::move(inner)), eps_(eps) {
    if (!inner_) throw ValidationError("epsilon hull: null inner body");
    if (eps_ < 0) throw NegativeEpsilon("epsilon hull: eps < 0");
}

Vector EpsilonHull::project(const Vector& u) const {
    const double d = inner_->distance(u);
    if (d <= eps_) return u;
    const Vector p = inner_->project(u);
    return p + (eps_ / d) * (u - p);
}

double EpsilonHull::distance(const Vector& u) const {
    return std::max(inner_->distance(u) - eps_, 0.0);
}

std::optional<HullForm> EpsilonHull::hull_form() const {
    std::optional<HullForm> inner_form = inner_->hull_form();
    if (!inner_form) return std::nullopt;
    inner_form->radius += eps_;
    return inner_form;
}

namespace {
constexpr std::size_t kProductCap = 64;

Vector project_fattened_hull(const HullForm& form, const Vector& u) {
    const Vector p = project_onto_hull(form.generators, u);
    const double d = (u - p).norm();
    if (d <= form.radius) return u;
    return p + (form.radius / d) * (u - p);
}
}  // namespace

Blend::Blend(double t, Face face, BodyPtr outer)
    : t_(t), face_(std::move(face)), outer_(std::move(outer)) {
    if (!outer_) throw ValidationError("blend: null outer body");
    if (t_ < 0 || t_ > 1) throw ValidationError("blend: t outside [0,1]");
    if (t_ <= 0) {
        form_ = HullForm{face_.vertices(), 0.0};
    } else if (t_ >= 1) {
        form_ = outer_->hull_form();
    } else if (std::optional<HullForm> outer_form = outer_->hull_form()) {
        if (face_.vertices().size() * outer_form->generators.size() <= kProductCap) {
            HullForm f;
            f.radius = t_ * outer_form->radius;
            f.generators.reserve(face_.vertices().size() * outer_form->generators.size());
            for (const Vector& fv : face_.vertices())
                for (const Vector& g : outer_form->generators)
                    f.generators.push_back((1 - t_) * fv + t_ * g);
            form_ = std::move(f);
        }
    }
}

std::optional<HullForm> Blend::hull_form() const { return form_; }

std::vector<Vector> Blend::probe_points() const {
    std::vector<Vector> pts;
    for (const Vector& f : face_.vertices())
        for (const Vector& p : outer_->probe_points())
            pts.push_back((1 - t_) * f + t_ * p);
    return pts;
}

Vector Blend::project(const Vector& u) const {
    if (t_ <= 0) return project_onto_hull(face_.vertices(), u);
    if (t_ >= 1) return outer_->project(u);
    if (form_) return project_fattened_hull(*form_, u);
    return alternating_project(u);
}

double Blend::distance(const Vector& u) const {
    if (form_ && t_ > 0 && t_ < 1)
        return std::max((u - project_onto_hull(form_->generators, u)).norm() - form_->radius,
                        0.0);
    return Body::distance(u);
}

// Alternating exact block minimization of ||u - (1-t)s - tc||^2 over s in the
// face and c in the outer body; jointly convex, and the blend point
// (1-t)s + tc converges even where (s, c) has flat directions. The sliding
// mode along a face is geometric, so an Aitken tail estimate sharpens the
// stopping rule.
Vector Blend::alternating_project(const Vector& u) const {
    Vector s = project_onto_hull(face_.vertices(), u);
    Vector c = outer_->project((u - (1 - t_) * s) / t_);
    Vector x = (1 - t_) * s + t_ * c;
    double movement = 0, prev_movement = 0;
    for (long it = 0; it < kAltCap; ++it) {
        s = project_onto_hull(face_.vertices(), (u - t_ * c) / (1 - t_));
        c = outer_->project((u - (1 - t_) * s) / t_);
        const Vector xn = (1 - t_) * s + t_ * c;
        prev_movement = movement;
        movement = (xn - x).norm();
        x = xn;
        if (movement < kAltTol) return x;
        if (prev_movement > 0 && movement < prev_movement) {
            const double ratio = movement / prev_movement;
            if (movement * ratio / (1 - ratio) < kAltTol) return x;
        }
    }
    if (movement <= 1e-8) return x;
    throw NonConvergence("blend projection: alternating minimization cap reached", kAltCap,
                         movement);
}

BodyPtr epsilon_hull(BodyPtr inner, double eps) {
    if (eps < 0) throw NegativeEpsilon("epsilon_hull: eps < 0");
    return std::make_shared<EpsilonHull>(std::move(inner), eps);
}

BodyPtr blend(const Face& face, BodyPtr outer, double t, double contain_tol) {
    if (!outer) throw ValidationError("blend: null outer body");
    if (t < 0 || t > 1) throw ValidationError("blend: t outside [0,1]");
    for (const Vector& v : face.vertices()) {
        const double d = outer->distance(v);
        if (d > contain_tol)
            throw FaceNotContained("blend: face vertex at distance " + std::to_string(d) +
                                   " from the outer body");
    }
    return std::make_shared<Blend>(t, face, std::move(outer));
}

}  // namespace eqsp
