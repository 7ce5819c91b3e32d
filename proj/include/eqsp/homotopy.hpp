#pragma once

#include <iosfwd>
#include <vector>

#include "eqsp/equispace.hpp"

namespace eqsp {

struct CurveSample {
    double t = 0;
    double eps = 0;
    Vector v;
    bool ok = true;  // false when the solve for this sample failed
};

struct HomotopyCurve {
    std::vector<CurveSample> samples;  // strictly increasing t
    double t0 = 1;
    double delta0 = 0;  // min successful eps among samples
};

// Family of blends (1-t) S^i + t C^i. Requires S^i inside C^i (face-vertex
// check); the covering property of the C^i is the caller's concern.
HFamily blend_family(const Simplex& S, const std::vector<BodyPtr>& covers, double t,
                     double contain_tol = 1e-7);

// Smallest t at which the blended family covers the simplex, located by
// bisection on the monotone covering predicate (blend nesting in t).
// Requires the covers to cover S at t=1; throws NotACovering otherwise.
double find_t0(const Simplex& S, const std::vector<BodyPtr>& covers, double tol = 1e-6);

// 'uniform_count' evenly spaced values in [0, t0) plus the geometric tail
// t0 - 2^-k, deduplicated and sorted.
std::vector<double> default_t_samples(double t0, int uniform_count = 32);

// Solves the blended family at every sample t < t0 and assembles the curve.
// Individual sample failures are recorded (ok=false) and the curve continues.
// t0_hint < 0 computes the threshold; a nonnegative hint reuses a known one.
HomotopyCurve epsilon_curve(const Simplex& S, const std::vector<BodyPtr>& covers,
                            const std::vector<double>& t_samples, double tol = 1e-6,
                            double t0_hint = -1.0);

// CSV export: header t,eps_t,v0,...,v{n-1}; one row per successful sample;
// 17 significant digits.
void write_curve_csv(const HomotopyCurve& curve, std::ostream& os);

}  // namespace eqsp
