// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "logdens/criteria.hpp"
#include "logdens/convexgeom.hpp"
#include "logdens/generators.hpp"
#include "testutil.hpp"

using namespace logdens;

namespace {

int g_failed = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s — %s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!ok) ++g_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// 1. Right logarithmic measure of {n <= 1e6} over (10, 1e4] against the
// asymptotic harmonic-sum oracle, in under a second.
void criterion1(const PointDistribution& harmonic1e6) {
    const auto t0 = std::chrono::steady_clock::now();
    const double value = right_log_measure(harmonic1e6, 10.0, 1e4);
    const double elapsed = seconds_since(t0);
    const double oracle = testutil::harmonic_number(1e4) - testutil::harmonic_number(10.0);
    const bool ok = std::abs(value - oracle) <= 1e-2 &&
                    std::abs(value - std::log(1e3)) <= 0.1 && elapsed < 1.0;
    report(1, "harmonic logarithmic measure", ok,
           "value " + fmt(value) + ", oracle " + fmt(oracle) + ", ln(10^3) " +
               fmt(std::log(1e3)) + ", " + fmt(elapsed) + " s");
}

// 2. Critical strip width 2*pi +- 0.15 for the arithmetic progression, with
// the matching width-threshold verdicts, in under ten seconds.
void criterion2(const PointDistribution& harmonic1e6) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cw = critical_width(harmonic1e6, kPi / 2.0);
    const auto complete = theorem1_verdict(harmonic1e6, kPi, kPi / 2.0);
    const auto incomplete = theorem1_verdict(harmonic1e6, 4.0 * kPi, kPi / 2.0);
    const double elapsed = seconds_since(t0);
    const bool ok = !cw.infinite && std::abs(cw.value - 2.0 * kPi) <= 0.15 &&
                    cw.report.converged && complete.verdict == Verdict::Complete &&
                    incomplete.verdict == Verdict::Incomplete && elapsed < 10.0;
    report(2, "critical width threshold", ok,
           "width " + fmt(cw.value) + " (target " + fmt(2.0 * kPi) + "), b=pi " +
               to_string(complete.verdict) + ", b=4pi " + to_string(incomplete.verdict) +
               ", " + fmt(elapsed) + " s");
}

// 3. Boundary behavior of the pair-supremum detector: bounded at the critical
// width, divergent at half of it.
void criterion3(const PointDistribution& harmonic1e6) {
    const auto bounded = theorem2_verdict(harmonic1e6, 2.0 * kPi, kPi / 2.0);
    const auto divergent = theorem2_verdict(harmonic1e6, kPi, kPi / 2.0);
    // margins carry the measured per-decade growth relative to the margins
    const double bounded_growth = bounded.margin + 0.1;
    const double divergent_growth = divergent.margin + 1.0;
    const bool ok = bounded.verdict == Verdict::Incomplete && bounded_growth < 0.1 &&
                    divergent.verdict == Verdict::Complete &&
                    divergent_growth >= 0.5 * std::log(10.0);
    report(3, "pair supremum boundary behavior", ok,
           "b=2pi " + to_string(bounded.verdict) + " (growth " + fmt(bounded_growth) +
               "/decade), b=pi " + to_string(divergent.verdict) + " (growth " +
               fmt(divergent_growth) + "/decade)");
}

// 4. The four block-density estimates agree within 5% relative spread for
// five structurally different distributions.
void criterion4(const PointDistribution& harmonic1e6) {
    const EstimationParams params;
    std::vector<std::pair<std::string, PointDistribution>> cases;
    cases.emplace_back("harmonic", harmonic1e6);
    cases.emplace_back("scaled x2", scale(harmonic1e6, {2.0, 0.0}));
    cases.emplace_back("symmetric", union_of(harmonic1e6, scale(harmonic1e6, {-1.0, 0.0})));
    cases.emplace_back("geometric", generate(GeneratorSpec::parse("geom n=20 ratio=2")));
    cases.emplace_back("sector cloud", generate(GeneratorSpec::parse(
                                           "sector theta=0 a=pi/4 density=1 "
                                           "horizon=10^6 seed=7")));
    bool ok = true;
    std::string detail;
    for (const auto& [name, dist] : cases) {
        const auto r = ln_dens(dist, params);
        ok = ok && r.relative_spread <= 0.05;
        if (!detail.empty()) detail += ", ";
        detail += name + " spread " + fmt(r.relative_spread) + " (bar " + fmt(r.bar) + ")";
    }
    report(4, "block density coincidence", ok, detail);
}

// 5. Submeasure axioms for 100 random finite distributions: no subadditivity
// violations, finite doubling bound, exact additivity of the one-sided table.
void criterion5() {
    SplitMix64 rng(2024);
    int bad = 0;
    double worst_gap = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 5 + static_cast<int>(rng.next() % 56);
        const auto dist = testutil::random_cloud(rng, n, 0.5, 1000.0);
        const RadialGrid grid =
            RadialGrid::geometric(0.25, std::exp(0.125), dist.truncation_radius());
        const auto sub =
            IntervalMeasureTable::from_distribution(dist, grid, Provenance::Submeasure);
        const auto axioms = check_submeasure_axioms(sub, 1e-9);
        const auto right =
            IntervalMeasureTable::from_distribution(dist, grid, Provenance::Right);
        const double gap = check_submeasure_axioms(right, 1e-9).max_additivity_gap;
        worst_gap = std::max(worst_gap, gap);
        if (!axioms.l2_violations.empty() || !std::isfinite(axioms.l1_bound) ||
            gap > 1e-9)
            ++bad;
    }
    report(5, "submeasure axioms on random distributions", bad == 0,
           std::to_string(100 - bad) + "/100 clean, worst additivity gap " +
               fmt(worst_gap));
}

// 6. Exact convex geometry: disk, unit square, strip, small point clouds.
void criterion6() {
    SplitMix64 rng(6);
    bool ok = true;
    std::string why;
    const double radius = 1.0 + rng.uniform01();
    const ConvexBody disk(Disk{{0.0, 0.0}, radius});
    for (int k = 0; k < 100 && ok; ++k) {
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        if (width(disk, theta) != 2.0 * radius) {
            ok = false;
            why = "disk width";
        }
    }
    if (breadth(disk) != 2.0 * radius || diameter(disk) != 2.0 * radius) {
        ok = false;
        why = "disk breadth/diameter";
    }

    const ConvexBody square(
        Polygon{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}});
    if (std::abs(breadth(square) - 1.0) > 1e-12 ||
        std::abs(diameter(square) - std::sqrt(2.0)) > 1e-12) {
        ok = false;
        why = "unit square";
    }

    const double b = 0.5 + rng.uniform01();
    const double axis = rng.uniform(0.0, kPi);
    const ConvexBody strip(Strip{axis, b, 0.0});
    if (std::abs(width(strip, axis + kPi / 2.0) - b) > 1e-12) {
        ok = false;
        why = "strip width at the orthogonal direction";
    }
    for (int k = 0; k < 100 && ok; ++k) {
        double theta = rng.uniform(0.0, 2.0 * kPi);
        if (std::abs(std::abs(wrap_angle(theta - axis)) - kPi / 2.0) < 1e-6) theta += 0.01;
        if (width(strip, theta) != kInf) {
            ok = false;
            why = "strip width off-axis";
        }
    }

    for (int rep = 0; rep < 25 && ok; ++rep) {
        std::vector<complexd> pts;
        const int n = 2 + static_cast<int>(rng.next() % 11);
        for (int k = 0; k < n; ++k)
            pts.push_back({rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)});
        double brute = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                brute = std::max(brute, std::abs(pts[i] - pts[j]));
        if (diameter(ConvexBody::hull_of(pts)) != brute) {
            ok = false;
            why = "point cloud diameter";
        }
    }
    report(6, "geometry exactness", ok, ok ? "disk, square, strip, clouds all exact" : why);
}

// 7. Verdict-level properties over random cases: rotation equivariance,
// monotonicity in the width b, monotonicity under enlargement of Z.
void criterion7() {
    SplitMix64 rng(777);
    EstimationParams params;
    params.horizon = 2e4;
    int bad = 0;
    std::string why;
    for (int rep = 0; rep < 50; ++rep) {
        PointDistribution dist;
        if (rep % 3 != 2) {
            const double step = std::pow(2.0, static_cast<double>(rng.next() % 4) - 1.0);
            const long long n = static_cast<long long>(2e4 / step);
            dist = generate(GeneratorSpec::parse(
                "arith n=" + std::to_string(n) + " step=" + std::to_string(step)));
        } else {
            dist = testutil::random_cloud(rng, 30, 1.0, 1000.0, 2e4);
        }
        const double b = rng.uniform(0.5, 8.0);
        const double theta = rng.uniform(0.0, kPi);
        const double phi = rng.uniform(0.0, 2.0 * kPi);

        const auto base = theorem1_verdict(dist, b, theta, params);
        const auto rotated = theorem1_verdict(rotate(dist, phi), b, theta + phi, params);
        if (base.verdict != rotated.verdict) {
            ++bad;
            why = "equivariance at rep " + std::to_string(rep);
            continue;
        }

        const auto wider = theorem1_verdict(dist, 2.0 * b, theta, params);
        if (base.verdict == Verdict::Incomplete && wider.verdict != Verdict::Incomplete) {
            ++bad;
            why = "b-monotonicity (incomplete) at rep " + std::to_string(rep);
            continue;
        }
        if (wider.verdict == Verdict::Complete && base.verdict != Verdict::Complete) {
            ++bad;
            why = "b-monotonicity (complete) at rep " + std::to_string(rep);
            continue;
        }

        // enlargement: only decided completeness with a safe margin must survive
        if (base.verdict == Verdict::Complete && base.margin > 0.1) {
            const auto extras = testutil::random_cloud(rng, 3, 300.0, 1000.0, 2e4);
            const auto larger = theorem1_verdict(union_of(dist, extras), b, theta, params);
            if (larger.verdict != Verdict::Complete) {
                ++bad;
                why = "Z-monotonicity at rep " + std::to_string(rep);
            }
        }
    }
    report(7, "equivariance and monotonicity", bad == 0,
           bad == 0 ? "50/50 cases consistent" : why);
}

// 8. Degenerate inputs: the empty distribution and a purely imaginary one.
void criterion8() {
    bool ok = true;
    std::string why = "empty and imaginary-axis cases behave exactly";
    const PointDistribution empty;
    const auto r = ln_dens(empty);
    if (!(r.value.has_value() && *r.value == 0.0 && r.converged)) {
        ok = false;
        why = "empty ln-dens";
    }
    if (theorem1_verdict(empty, kPi, 0.4).verdict != Verdict::Incomplete ||
        theorem2_verdict(empty, kPi, 0.4).verdict != Verdict::Incomplete ||
        breadth_criterion(empty, kPi).verdict != Verdict::Incomplete ||
        diameter_sufficient(empty, kPi).verdict != Verdict::Inconclusive) {
        ok = false;
        why = "empty verdicts";
    }

    const auto imaginary =
        generate(GeneratorSpec::parse("arith n=100000 step=1 dir=pi/2"));
    const EstimationParams params;
    const auto grid = params.grid_for(imaginary);
    const auto table = IntervalMeasureTable::from_distribution(
        rotate(imaginary, kPi / 2.0 - kPi / 2.0), grid, Provenance::Submeasure);
    const int m = table.point_count();
    for (int i = 0; i < m && ok; ++i)
        for (int j = i + 1; j < m; ++j)
            if (table.value(i, j) != 0.0) {
                ok = false;
                why = "imaginary-axis submeasure not exactly zero";
                break;
            }
    if (ok && theorem2_verdict(imaginary, kPi, kPi / 2.0).verdict != Verdict::Incomplete) {
        ok = false;
        why = "imaginary-axis verdict";
    }
    report(8, "degenerate inputs", ok, why);
}

}  // namespace

int main() {
    const auto harmonic1e6 = testutil::harmonic(1000000);
    criterion1(harmonic1e6);
    criterion2(harmonic1e6);
    criterion3(harmonic1e6);
    criterion4(harmonic1e6);
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failed == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failed);
    return 1;
}
