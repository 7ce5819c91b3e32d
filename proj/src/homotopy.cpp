#include "eqsp/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace eqsp {

HFamily blend_family(const Simplex& S, const std::vector<BodyPtr>& covers, double t,
                     double contain_tol) {
    const int n = S.dim();
    if (static_cast<int>(covers.size()) != n + 1)
        throw InvalidFamily("blend_family: expected " + std::to_string(n + 1) + " covers");
    std::vector<BodyPtr> bodies;
    bodies.reserve(covers.size());
    for (int i = 0; i <= n; ++i) bodies.push_back(blend(S.face(i), covers[i], t, contain_tol));
    return HFamily(S, std::move(bodies), contain_tol);
}

double find_t0(const Simplex& S, const std::vector<BodyPtr>& covers, double tol) {
    if (tol <= 0) throw ValidationError("find_t0: tol must be positive");
    const EquispaceResult at_one = solve(blend_family(S, covers, 1.0), tol);
    if (!at_one.covering)
        throw NotACovering("find_t0: the covers do not cover the simplex (eps0 = " +
                           std::to_string(at_one.eps0) + " at t = 1)");
    if (solve(blend_family(S, covers, 0.0), tol).covering) return 0.0;

    // Blend nesting makes the covering predicate monotone in t.
    double lo = 0.0, hi = 1.0;
    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        if (solve(blend_family(S, covers, mid), tol).covering)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> default_t_samples(double t0, int uniform_count) {
    std::vector<double> ts;
    for (int i = 0; i < uniform_count; ++i) ts.push_back(t0 * i / uniform_count);
    for (int k = 1; k <= 20; ++k) {
        const double t = t0 - std::pow(2.0, -k);
        if (t > 0 && t < t0) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             ts.end());
    return ts;
}

HomotopyCurve epsilon_curve(const Simplex& S, const std::vector<BodyPtr>& covers,
                            const std::vector<double>& t_samples, double tol, double t0_hint) {
    HomotopyCurve curve;
    curve.t0 = t0_hint >= 0 ? t0_hint : find_t0(S, covers, tol);

    std::vector<double> ts = t_samples;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    double delta0 = std::numeric_limits<double>::infinity();
    for (double t : ts) {
        if (t < 0 || t >= curve.t0) continue;
        CurveSample sample;
        sample.t = t;
        try {
            const EquispaceResult r = solve(blend_family(S, covers, t), tol);
            sample.eps = r.eps0;
            sample.v = r.v;
            sample.ok = true;
            delta0 = std::min(delta0, r.eps0);
        } catch (const Error&) {
            sample.ok = false;
        }
        curve.samples.push_back(std::move(sample));
    }
    curve.delta0 = std::isfinite(delta0) ? delta0 : 0.0;
    return curve;
}

void write_curve_csv(const HomotopyCurve& curve, std::ostream& os) {
    auto fmt = [](double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    Eigen::Index n = 0;
    for (const CurveSample& s : curve.samples)
        if (s.ok) {
            n = s.v.size();
            break;
        }
    os << "t,eps_t";
    for (Eigen::Index k = 0; k < n; ++k) os << ",v" << k;
    os << "\n";
    for (const CurveSample& s : curve.samples) {
        if (!s.ok) continue;
        os << fmt(s.t) << "," << fmt(s.eps);
        for (Eigen::Index k = 0; k < s.v.size(); ++k) os << "," << fmt(s.v(k));
        os << "\n";
    }
}

}  // namespace eqsp
