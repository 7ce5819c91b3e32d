#pragma once

#include <Eigen/Dense>
#include <vector>

#include "eqsp/errors.hpp"

namespace eqsp {

using Vector = Eigen::VectorXd;

double diameter_of(const std::vector<Vector>& points);

// A maximal face of a simplex: the convex hull of all vertices except one.
// Kept as a plain vertex list so it can also serve as a projection body and
// as the left factor of a Minkowski blend.
class Face {
public:
    Face(std::vector<Vector> vertices, int omitted_index);

    const std::vector<Vector>& vertices() const { return vertices_; }
    // 0-based index of the vertex the face omits in its parent simplex.
    int omitted_index() const { return omitted_; }
    int ambient_dim() const { return static_cast<int>(vertices_.front().size()); }
    double diameter() const { return diameter_of(vertices_); }

private:
    std::vector<Vector> vertices_;
    int omitted_;
};

// An n-simplex in R^n given by n+1 affinely independent vertices.
// Immutable after construction; all queries are pure.
class Simplex {
public:
    // Throws DimensionMismatch on wrong vertex counts/lengths and
    // DegenerateSimplex when the edge-vector determinant is below the
    // relative tolerance.
    explicit Simplex(std::vector<Vector> vertices, double degeneracy_tol = 1e-10);

    int dim() const { return dim_; }
    const std::vector<Vector>& vertices() const { return vertices_; }
    const Vector& vertex(int i) const;

    // Face omitting vertex i (0-based). Throws IndexOutOfRange.
    Face face(int i) const;

    // Barycentric coordinates of u: weights w with sum(w)=1 and sum(w_i a_i)=u.
    Vector barycentric(const Vector& u) const;
    // u lies in the simplex iff all barycentric weights are >= -tol.
    bool contains(const Vector& u, double tol = 1e-9) const;

    Vector barycenter() const;
    double diameter() const { return diameter_; }
    // Distance from the barycenter to the nearest maximal face.
    double min_face_distance() const;

private:
    std::vector<Vector> vertices_;
    int dim_;
    double diameter_;
    Eigen::PartialPivLU<Eigen::MatrixXd> bary_lu_;  // affine system [vertices; 1...1]
};

}  // namespace eqsp
