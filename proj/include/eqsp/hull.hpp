#pragma once

#include <vector>

#include "eqsp/simplex.hpp"

namespace eqsp {

// Nearest point of conv(generators) to u, computed with Wolfe's minimum-norm
// point algorithm. Finite, exact up to roundoff on the small dense systems it
// solves. Throws NonConvergence if the iteration cap is hit with a
// significant optimality gap (does not happen on sane inputs).
Vector project_onto_hull(const std::vector<Vector>& generators, const Vector& u);

// Minimum-norm point of conv(points). project_onto_hull is the shifted call.
Vector min_norm_point(const std::vector<Vector>& points);

}  // namespace eqsp
