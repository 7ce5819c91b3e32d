#include "eqsp/hull.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "eqsp/errors.hpp"

namespace eqsp {

namespace {

// Affine minimizer of ||sum(alpha_a p_a)||^2 subject to sum(alpha) = 1 over
// the corral, through the KKT system [[Gram, 1], [1^T, 0]]. Returns false
// when the corral has become affinely dependent and the system is singular.
bool affine_minimizer(const Eigen::MatrixXd& gram, const std::vector<int>& corral,
                      Eigen::VectorXd& alpha) {
    const int c = static_cast<int>(corral.size());
    Eigen::MatrixXd kkt(c + 1, c + 1);
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) kkt(a, b) = gram(corral[a], corral[b]);
    kkt.block(0, c, c, 1).setOnes();
    kkt.block(c, 0, 1, c).setOnes();
    kkt(c, c) = 0.0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(c + 1);
    rhs(c) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) return false;
    Eigen::VectorXd sol = lu.solve(rhs);
    alpha = sol.head(c);
    return alpha.allFinite();
}

}  // namespace

// Wolfe's minimum-norm point algorithm over conv(points). The corral is a
// small affinely independent subset; major cycles add the most violating
// generator, minor cycles restore convex weights by line search toward the
// affine minimizer, dropping members that hit zero.
Vector min_norm_point(const std::vector<Vector>& points) {
    if (points.empty()) throw DimensionMismatch("min_norm_point: empty generator list");
    const Eigen::Index n = points.front().size();
    const int m = static_cast<int>(points.size());
    for (const Vector& p : points)
        if (p.size() != n) throw DimensionMismatch("min_norm_point: mixed dimensions");

    Eigen::MatrixXd gen(n, m);
    for (int k = 0; k < m; ++k) gen.col(k) = points[k];
    const Eigen::MatrixXd gram = gen.transpose() * gen;

    double scale2 = 1e-30;
    for (int k = 0; k < m; ++k) scale2 = std::max(scale2, gram(k, k));
    const double enter_tol = 1e-13 * scale2;
    const double weight_tol = 1e-14;

    int start = 0;
    for (int k = 1; k < m; ++k)
        if (gram(k, k) < gram(start, start)) start = k;

    std::vector<int> corral{start};
    Eigen::VectorXd weights = Eigen::VectorXd::Ones(1);
    Vector x = points[start];

    const int major_cap = 16 * m + 64;
    for (int major = 0; major < major_cap; ++major) {
        // Most violating generator under the current x.
        int entering = 0;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < m; ++k) {
            const double val = x.dot(points[k]);
            if (val < best) {
                best = val;
                entering = k;
            }
        }
        const double xx = x.squaredNorm();
        if (best >= xx - enter_tol) return x;  // optimality certificate
        bool already = false;
        for (int idx : corral) already = already || (idx == entering);
        if (already) return x;

        corral.push_back(entering);
        weights.conservativeResize(corral.size());
        weights(weights.size() - 1) = 0.0;

        // Minor cycles: each pass either accepts the affine minimizer or
        // removes at least one corral member, so this terminates.
        while (true) {
            Eigen::VectorXd alpha;
            if (!affine_minimizer(gram, corral, alpha)) {
                corral.pop_back();
                weights.conservativeResize(corral.size());
                return x;  // entering point affinely dependent: x already optimal over its face
            }
            if (alpha.minCoeff() >= -weight_tol) {
                weights = alpha.cwiseMax(0.0);
                weights /= weights.sum();
                break;
            }
            double theta = 1.0;
            for (int a = 0; a < alpha.size(); ++a)
                if (alpha(a) < 0.0) theta = std::min(theta, weights(a) / (weights(a) - alpha(a)));
            weights = (1.0 - theta) * weights + theta * alpha;

            std::vector<int> kept_idx;
            for (int a = 0; a < weights.size(); ++a)
                if (weights(a) > weight_tol) kept_idx.push_back(a);
            if (kept_idx.empty()) kept_idx.push_back(0);
            std::vector<int> new_corral;
            Eigen::VectorXd new_weights(kept_idx.size());
            for (std::size_t a = 0; a < kept_idx.size(); ++a) {
                new_corral.push_back(corral[kept_idx[a]]);
                new_weights(a) = weights(kept_idx[a]);
            }
            corral = std::move(new_corral);
            weights = new_weights / new_weights.sum();
        }

        x.setZero();
        for (Eigen::Index a = 0; a < weights.size(); ++a) x += weights(a) * points[corral[a]];
    }

    // The cap is generous; reaching it with a large duality gap means the
    // instance is numerically hostile.
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; ++k) best = std::min(best, x.dot(points[k]));
    const double gap = x.squaredNorm() - best;
    if (gap > 1e-7 * scale2)
        throw NonConvergence("min_norm_point: iteration cap reached", major_cap, gap);
    return x;
}

Vector project_onto_hull(const std::vector<Vector>& generators, const Vector& u) {
    if (generators.empty()) throw DimensionMismatch("project_onto_hull: empty generator list");
    if (generators.front().size() != u.size())
        throw DimensionMismatch("project_onto_hull: point dimension mismatch");
    if (generators.size() == 1) return generators.front();
    std::vector<Vector> shifted;
    shifted.reserve(generators.size());
    for (const Vector& g : generators) shifted.push_back(g - u);
    return u + min_norm_point(shifted);
}

}  // namespace eqsp
