#include "eqsp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "eqsp/hull.hpp"

namespace eqsp {

double diameter_of(const std::vector<Vector>& points) {
    double d = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            d = std::max(d, (points[i] - points[j]).norm());
    return d;
}

Face::Face(std::vector<Vector> vertices, int omitted_index)
    : vertices_(std::move(vertices)), omitted_(omitted_index) {
    if (vertices_.empty()) throw DimensionMismatch("face: empty vertex list");
}

Simplex::Simplex(std::vector<Vector> vertices, double degeneracy_tol)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2)
        throw DimensionMismatch("simplex: needs at least 2 vertices");
    dim_ = static_cast<int>(vertices_.size()) - 1;
    for (const Vector& v : vertices_) {
        if (v.size() != dim_)
            throw DimensionMismatch("simplex: expected " + std::to_string(dim_ + 1) +
                                    " vertices of length " + std::to_string(dim_));
        if (!v.allFinite()) throw ValidationError("simplex: non-finite vertex coordinate");
    }

    // Affine independence: determinant of the edge matrix relative to the
    // product of edge lengths.
    Eigen::MatrixXd edges(dim_, dim_);
    double scale = 1.0;
    for (int i = 0; i < dim_; ++i) {
        edges.col(i) = vertices_[i] - vertices_[dim_];
        scale *= edges.col(i).norm();
    }
    const double det = edges.determinant();
    if (std::abs(det) <= degeneracy_tol * scale)
        throw DegenerateSimplex("simplex: vertices are affinely dependent (|det| = " +
                                std::to_string(std::abs(det)) + ")");

    diameter_ = diameter_of(vertices_);

    Eigen::MatrixXd affine(dim_ + 1, dim_ + 1);
    for (int j = 0; j <= dim_; ++j) {
        affine.block(0, j, dim_, 1) = vertices_[j];
        affine(dim_, j) = 1.0;
    }
    bary_lu_.compute(affine);
}

const Vector& Simplex::vertex(int i) const {
    if (i < 0 || i > dim_)
        throw IndexOutOfRange("simplex: vertex index " + std::to_string(i) + " out of range");
    return vertices_[i];
}

Face Simplex::face(int i) const {
    if (i < 0 || i > dim_)
        throw IndexOutOfRange("simplex: face index " + std::to_string(i) + " out of range");
    std::vector<Vector> verts;
    verts.reserve(dim_);
    for (int j = 0; j <= dim_; ++j)
        if (j != i) verts.push_back(vertices_[j]);
    return Face(std::move(verts), i);
}

Vector Simplex::barycentric(const Vector& u) const {
    if (u.size() != dim_)
        throw DimensionMismatch("barycentric: point has wrong dimension");
    Vector rhs(dim_ + 1);
    rhs.head(dim_) = u;
    rhs(dim_) = 1.0;
    return bary_lu_.solve(rhs);
}

bool Simplex::contains(const Vector& u, double tol) const {
    return barycentric(u).minCoeff() >= -tol;
}

Vector Simplex::barycenter() const {
    Vector b = Vector::Zero(dim_);
    for (const Vector& v : vertices_) b += v;
    return b / static_cast<double>(dim_ + 1);
}

double Simplex::min_face_distance() const {
    const Vector b = barycenter();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= dim_; ++i) {
        const Face f = face(i);
        best = std::min(best, (b - project_onto_hull(f.vertices(), b)).norm());
    }
    return best;
}

}  // namespace eqsp
