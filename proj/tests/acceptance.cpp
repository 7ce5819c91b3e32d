// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and nowhere else.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "eqsp/covering.hpp"
#include "eqsp/homotopy.hpp"
#include "support/generators.hpp"

using namespace eqsp;
using testsupport::Rng;
using testsupport::vec;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BodyPtr interval(double lo, double hi) {
    return std::make_shared<VPolytope>(std::vector<Vector>{vec({lo}), vec({hi})});
}

std::vector<BodyPtr> subdivision_bodies(const Simplex& S) {
    std::vector<BodyPtr> bodies;
    for (int i = 0; i <= S.dim(); ++i) {
        std::vector<Vector> gens = S.face(i).vertices();
        gens.push_back(S.barycenter());
        bodies.push_back(std::make_shared<VPolytope>(std::move(gens)));
    }
    return bodies;
}

struct SuiteEntry {
    Simplex S;
    std::vector<BodyPtr> bodies;
    EquispaceResult solved;
    GridValue maximin;
    GridValue minimax;
};

// Criterion 1: 1-D analytic gap fixture.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const HFamily fam(testsupport::unit_segment(), {interval(0.7, 1.0), interval(0.0, 0.3)});
    const EquispaceResult r = solve(fam, 1e-6);
    const double elapsed = seconds_since(t0);
    const bool ok = std::abs(r.eps0 - 0.2) <= 1e-6 && std::abs(r.v(0) - 0.5) <= 1e-6 &&
                    elapsed < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "eps0 = %.9f, v = %.9f, %.3f s", r.eps0, r.v(0), elapsed);
    report(1, "1-D gap family", ok, buf);
}

// Criterion 2: incenter of the corner triangle from the faces-only family.
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const Simplex tri = testsupport::corner_triangle();
    std::vector<BodyPtr> faces;
    for (int i = 0; i < 3; ++i) faces.push_back(std::make_shared<FaceBody>(tri.face(i)));
    const EquispaceResult r = solve(HFamily(tri, faces), 1e-6);
    const double elapsed = seconds_since(t0);
    const double inradius = (2.0 - std::sqrt(2.0)) / 2.0;
    const bool ok = std::abs(r.eps0 - inradius) <= 1e-5 &&
                    (r.v - vec({inradius, inradius})).norm() <= 1e-4 && elapsed < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "eps0 = %.9f (want %.9f), |v - incenter| = %.2e, %.3f s",
                  r.eps0, inradius, (r.v - vec({inradius, inradius})).norm(), elapsed);
    report(2, "incenter fixture", ok, buf);
}

// Criterion 3: covering branch on subdivision families, n = 1, 2, 3.
void criterion3() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n) {
        const Simplex S = testsupport::corner_simplex(n);
        const EquispaceResult r = solve(HFamily(S, subdivision_bodies(S)), 1e-6);
        double worst = 0;
        for (double d : r.distances) worst = std::max(worst, d);
        ok = ok && r.eps0 <= 1e-6 && worst <= 1e-6;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%sn=%d: eps0 = %.2e, max d = %.2e", n > 1 ? "; " : "", n,
                      r.eps0, worst);
        detail += buf;
    }
    report(3, "covering branch", ok, detail);
}

// Criteria 4 and 5 share the randomized suite.
void criteria45() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(2024);
    std::vector<SuiteEntry> suite;
    const int depth = 128;

    const int per_n[4] = {0, 6, 8, 6};  // 20 families total
    for (int n = 1; n <= 3; ++n) {
        for (int k = 0; k < per_n[n]; ++k) {
            const Simplex S = (k % 2 == 0) ? testsupport::corner_simplex(n)
                                           : testsupport::random_simplex(n, rng);
            const double kappa = (k < 2) ? 0.25 : 0.35 + 0.05 * k;
            std::vector<BodyPtr> bodies = testsupport::random_hfamily(S, rng, kappa, 2 + k % 3);
            SuiteEntry entry{S, bodies, solve(HFamily(S, bodies), 1e-6),
                             grid_maximin(S, bodies, depth), grid_minimax(S, bodies, depth)};
            suite.push_back(std::move(entry));
        }
    }

    bool ok4 = true;
    double worst_gap = 0, worst_dev = 0;
    for (const SuiteEntry& e : suite) {
        const double mesh = e.maximin.mesh;
        const double gap = std::abs(e.maximin.value - e.minimax.value);
        const double dev = std::max(std::abs(e.solved.eps0 - e.maximin.value),
                                    std::abs(e.solved.eps0 - e.minimax.value));
        worst_gap = std::max(worst_gap, gap / mesh);
        worst_dev = std::max(worst_dev, dev - mesh);
        ok4 = ok4 && gap <= 2 * mesh && dev <= mesh + 1e-6;
    }
    const double elapsed = seconds_since(t0);
    char buf4[200];
    std::snprintf(buf4, sizeof buf4,
                  "%zu families, worst |maximin-minimax| = %.2f mesh, worst |eps0-grid|-mesh = "
                  "%.2e, %.1f s",
                  suite.size(), worst_gap, worst_dev, elapsed);
    report(4, "sup-inf identity suite", ok4 && elapsed < 300.0, buf4);

    bool ok5 = true;
    int qualifying = 0;
    double worst_diam = 0;
    for (const SuiteEntry& e : suite) {
        const double mesh = e.maximin.mesh;
        if (e.solved.eps0 <= 5 * mesh) continue;
        ++qualifying;
        const auto locus = equispace_locus(e.S, e.bodies, depth, e.solved.eps0, mesh);
        double diam = 0;
        for (std::size_t i = 0; i < locus.size(); ++i)
            for (std::size_t j = i + 1; j < locus.size(); ++j)
                diam = std::max(diam, (locus[i] - locus[j]).norm());
        worst_diam = std::max(worst_diam, diam / mesh);
        ok5 = ok5 && !locus.empty() && diam <= 20 * mesh;
    }
    char buf5[160];
    std::snprintf(buf5, sizeof buf5, "%d qualifying families, worst locus diameter = %.2f mesh",
                  qualifying, worst_diam);
    report(5, "uniqueness locus", ok5 && qualifying >= 3, buf5);
}

// Criterion 6: monotonicity under member-wise enlargement.
void criterion6() {
    Rng rng(4096);
    bool ok = true;
    double worst = -1e300;
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 1 + rep % 3;
        const Simplex S = testsupport::random_simplex(n, rng);
        const auto inner = testsupport::random_hfamily(S, rng, 0.4, 2);
        const auto outer = testsupport::grow_family(S, inner, rng, 0.75, 3);
        const CompareResult cr = compare(HFamily(S, inner), HFamily(S, outer), 1e-6);
        worst = std::max(worst, cr.eps_outer - cr.eps_inner);
        ok = ok && cr.eps_outer <= cr.eps_inner + 2e-6;
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "20 nested pairs, worst eps(D) - eps(A) = %.2e", worst);
    report(6, "monotonicity", ok, buf);
}

// Criterion 7: the homotopy fixture and random covering families.
void criterion7() {
    bool ok = true;
    std::string detail;

    const Simplex seg = testsupport::unit_segment();
    const std::vector<BodyPtr> covers{interval(0, 1), interval(0, 1)};
    const double t0 = find_t0(seg, covers, 1e-6);
    ok = ok && std::abs(t0 - 0.5) <= 1e-4;
    double worst_curve = 0;
    for (double t : {0.1, 0.2, 0.3, 0.4}) {
        const double eps = solve(blend_family(seg, covers, t), 1e-6).eps0;
        worst_curve = std::max(worst_curve, std::abs(eps - (0.5 - t)));
    }
    ok = ok && worst_curve <= 1e-4;
    char buf[120];
    std::snprintf(buf, sizeof buf, "t0 = %.6f, worst |eps_t - (0.5 - t)| = %.2e", t0, worst_curve);
    detail = buf;

    Rng rng(777);
    for (int rep = 0; rep < 3; ++rep) {
        const Simplex tri = testsupport::random_simplex(2, rng);
        const auto cov = testsupport::random_covering(tri, rng, 2);
        const double tau = find_t0(tri, cov, 1e-6);
        const HomotopyCurve curve = epsilon_curve(tri, cov, default_t_samples(tau, 16), 1e-6, tau);
        for (std::size_t i = 1; i < curve.samples.size(); ++i) {
            if (!curve.samples[i].ok || !curve.samples[i - 1].ok) ok = false;
            if (curve.samples[i].eps > curve.samples[i - 1].eps + 2e-6) ok = false;
        }
        const double eps_near = solve(blend_family(tri, cov, tau - 1e-5), 1e-6).eps0;
        if (eps_near > 1e-3) ok = false;
        char buf2[96];
        std::snprintf(buf2, sizeof buf2, "; 2-D #%d: t0 = %.4f, eps(t0 - 1e-5) = %.2e", rep, tau,
                      eps_near);
        detail += buf2;
    }
    report(7, "homotopy", ok, detail);
}

// Criterion 8: intersection criterion fixtures and planted families.
void criterion8() {
    bool ok = true;
    std::string detail;

    const Simplex seg = testsupport::unit_segment();
    const FaceCoveringFamily pos(seg,
                                 {interval(0.5, 1.0), interval(0.0, 0.5), interval(0.2, 0.6)});
    const HellyResult rp = helly_criterion(pos);
    ok = ok && rp.intersects && rp.witness && std::abs((*rp.witness)(0) - 0.5) <= 1e-6;

    const FaceCoveringFamily neg(seg,
                                 {interval(0.6, 1.0), interval(0.0, 0.4), interval(0.3, 0.7)});
    const HellyResult rn = helly_criterion(neg);
    ok = ok && !rn.intersects && rn.counterexample &&
         *rn.counterexample == std::vector<int>{0, 1};
    detail = std::string("fixtures ") + (ok ? "ok" : "FAILED");

    Rng rng(31337);
    double worst_residual = 0;
    for (int rep = 0; rep < 5; ++rep) {
        const Simplex tri = testsupport::random_simplex(2, rng);
        const auto bodies = testsupport::random_helly_family(tri, rng, 5);
        const HellyResult r = helly_criterion(FaceCoveringFamily(tri, bodies), 64);
        if (!r.intersects || !r.witness) {
            ok = false;
            continue;
        }
        for (const BodyPtr& b : bodies)
            worst_residual = std::max(worst_residual, b->distance(*r.witness));
    }
    ok = ok && worst_residual <= 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, "; planted 2-D worst residual = %.2e", worst_residual);
    detail += buf;
    report(8, "intersection criterion", ok, detail);
}

// Criterion 9: projection oracle contract over all variants.
void criterion9() {
    Rng rng(55);
    const Simplex tri = testsupport::corner_triangle();

    std::vector<BodyPtr> zoo;
    zoo.push_back(std::make_shared<VPolytope>(
        std::vector<Vector>{vec({0, 0}), vec({1, 0}), vec({0.2, 0.5})}));
    zoo.push_back(std::make_shared<Ball>(vec({0.3, 0.3}), 0.25));
    zoo.push_back(std::make_shared<HalfspaceSet>(
        std::vector<Vector>{vec({-1, 0}), vec({0, -1}), vec({1, 1})},
        std::vector<double>{-0.05, -0.05, 0.95}));
    zoo.push_back(std::make_shared<FaceBody>(tri.face(0)));
    zoo.push_back(epsilon_hull(std::make_shared<FaceBody>(tri.face(1)), 0.2));
    zoo.push_back(epsilon_hull(zoo[0], 0.1));
    zoo.push_back(blend(tri.face(0), std::make_shared<VPolytope>(tri.vertices()), 0.35));
    zoo.push_back(blend(tri.face(2), std::make_shared<Ball>(vec({0.5, 0.0}), 0.55), 0.4));

    std::uniform_real_distribution<double> coord(-1.0, 2.0);
    bool ok = true;
    double worst_idem = 0, worst_nonexp = 0, worst_law = 0, worst_endpoint = 0;
    const int probes_per_body = 10000 / static_cast<int>(zoo.size()) + 1;
    for (const BodyPtr& body : zoo) {
        for (int rep = 0; rep < probes_per_body; ++rep) {
            const Vector u = vec({coord(rng), coord(rng)});
            const Vector w = vec({coord(rng), coord(rng)});
            const Vector pu = body->project(u);
            worst_idem = std::max(worst_idem, (body->project(pu) - pu).norm());
            worst_nonexp =
                std::max(worst_nonexp, (pu - body->project(w)).norm() - (u - w).norm());
        }
    }
    ok = ok && worst_idem <= 1e-8 && worst_nonexp <= 1e-8;

    // Hull law through the projection route.
    const BodyPtr hull_base = zoo[0];
    for (double eps : {0.05, 0.2}) {
        const BodyPtr hull = epsilon_hull(hull_base, eps);
        for (int rep = 0; rep < 500; ++rep) {
            const Vector u = vec({coord(rng), coord(rng)});
            const double via = (u - hull->project(u)).norm();
            const double law = std::max(hull_base->distance(u) - eps, 0.0);
            worst_law = std::max(worst_law, std::abs(via - law));
        }
    }
    ok = ok && worst_law <= 1e-9;

    // Blend endpoint identities.
    const BodyPtr outer = std::make_shared<VPolytope>(tri.vertices());
    const BodyPtr b0 = blend(tri.face(1), outer, 0.0);
    const BodyPtr b1 = blend(tri.face(1), outer, 1.0);
    const FaceBody face1(tri.face(1));
    for (int rep = 0; rep < 500; ++rep) {
        const Vector u = vec({coord(rng), coord(rng)});
        worst_endpoint = std::max(worst_endpoint,
                                  std::abs(b0->distance(u) - face1.distance(u)));
        worst_endpoint = std::max(worst_endpoint,
                                  std::abs(b1->distance(u) - outer->distance(u)));
    }
    ok = ok && worst_endpoint <= 1e-9;

    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "idempotence %.1e, non-expansiveness %.1e, hull law %.1e, endpoints %.1e",
                  worst_idem, worst_nonexp, worst_law, worst_endpoint);
    report(9, "projection oracle suite", ok, buf);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria45();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures ? 1 : 0;
}
