#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logdens/logmeasure.hpp"
#include "testutil.hpp"

using namespace logdens;

namespace {

const double kRatio = std::exp(0.125);

IntervalMeasureTable exact_log_table(double base, double horizon) {
    const RadialGrid grid = RadialGrid::geometric(base, kRatio, horizon);
    const std::vector<double> radii = grid.radii();
    std::vector<double> values;
    for (std::size_t i = 0; i < radii.size(); ++i)
        for (std::size_t j = i + 1; j < radii.size(); ++j)
            values.push_back(std::log(radii[j] / radii[i]));
    return IntervalMeasureTable(radii, std::move(values), Provenance::User);
}

}  // namespace

TEST_CASE("radial grid is geometric and capped by the horizon") {
    const RadialGrid grid = RadialGrid::geometric(1.0, kRatio, 1e4);
    CHECK(grid.radius(0) == 1.0);
    CHECK(grid.radius(8) == doctest::Approx(std::exp(1.0)));
    CHECK(grid.top() <= 1e4 * (1.0 + 1e-9));
    CHECK(grid.top() > 1e4 / kRatio);
    CHECK_THROWS_AS(RadialGrid::geometric(1.0, 0.9, 100.0), Error);
    CHECK_THROWS_AS(RadialGrid::geometric(1.0, kRatio, 1.2), Error);
}

TEST_CASE("interval measures on a small explicit multiset") {
    std::vector<Entry> entries = {
        {{2.0, 0.0}, 2}, {{-4.0, 0.0}, 1}, {{0.0, 5.0}, 1}, {{3.0, 4.0}, 1}};
    const auto dist = PointDistribution::from_points(std::move(entries));
    // right: 2 * 1/2 + Re(1/(3+4i)) = 1 + 3/25
    CHECK(right_log_measure(dist, 1.0, 5.0) == doctest::Approx(1.0 + 0.12));
    // left: only -4 contributes 1/4
    CHECK(left_log_measure(dist, 1.0, 5.0) == doctest::Approx(0.25));
    CHECK(log_submeasure(dist, 1.0, 5.0) == doctest::Approx(1.12));
    // interval is half-open: (2, 4] keeps -4, drops the points at modulus 2
    CHECK(right_log_measure(dist, 2.0, 4.0) == 0.0);
    CHECK(left_log_measure(dist, 2.0, 4.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(right_log_measure(dist, 0.0, 6.0), Error);
    CHECK_THROWS_AS(right_log_measure(dist, 1.0, 100.0), Error);  // past truncation
}

TEST_CASE("harmonic right measure matches the partial harmonic sums") {
    const auto dist = testutil::harmonic(1000);
    double direct = 0.0;
    for (int n = 11; n <= 100; ++n) direct += 1.0 / n;
    CHECK(right_log_measure(dist, 10.0, 100.0) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(left_log_measure(dist, 10.0, 100.0) == 0.0);
    // mirrored copy: left equals right, submeasure picks the max
    const auto sym = union_of(dist, scale(dist, {-1.0, 0.0}));
    CHECK(left_log_measure(sym, 10.0, 100.0) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(log_submeasure(sym, 10.0, 100.0) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("table cells agree with the direct interval measures") {
    const auto dist = testutil::harmonic(10000);
    const RadialGrid grid = RadialGrid::geometric(1.0, kRatio, 1e4);
    const auto table = IntervalMeasureTable::from_distribution(dist, grid, Provenance::Right);
    const auto radii = table.radii();
    for (int i : {0, 5, 20}) {
        for (int j : {7, 31, table.point_count() - 1}) {
            if (j <= i) continue;
            CHECK(table.value(i, j) ==
                  doctest::Approx(right_log_measure(dist, radii[static_cast<std::size_t>(i)],
                                                    radii[static_cast<std::size_t>(j)]))
                      .epsilon(1e-12));
        }
    }
    CHECK(table.provenance() == Provenance::Right);
    CHECK(table.log_step() == doctest::Approx(0.125));
    CHECK(table.span_decades() == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("table algebra: add, scale, max") {
    const auto a = exact_log_table(1.0, 1e4);
    const auto sum = add(a, a);
    const auto twice = scale_table(a, 2.0);
    const auto mx = max_table(a, twice);
    CHECK(sum.value(0, 5) == doctest::Approx(2.0 * a.value(0, 5)));
    CHECK(twice.value(3, 9) == doctest::Approx(2.0 * a.value(3, 9)));
    CHECK(mx.value(3, 9) == doctest::Approx(twice.value(3, 9)));
    CHECK_THROWS_AS(scale_table(a, -1.0), Error);
}

TEST_CASE("block densities of the exact logarithmic table are all one") {
    const auto table = exact_log_table(1.0, 1e5);
    const auto report = block_density(table);
    CHECK(report.bar == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.underline == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.inf_variant == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.b_variant == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(report.converged);
    REQUIRE(report.value.has_value());
    CHECK(*report.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("block densities of the harmonic distribution are near one") {
    const auto dist = testutil::harmonic(100000);
    const RadialGrid grid = RadialGrid::geometric(1.0, kRatio, 1e5);
    const auto table =
        IntervalMeasureTable::from_distribution(dist, grid, Provenance::Submeasure);
    const auto report = block_density(table);
    CHECK(report.bar == doctest::Approx(1.0).epsilon(0.02));
    CHECK(report.relative_spread <= 0.05);
    CHECK(report.converged);
}

TEST_CASE("block densities require three decades of grid") {
    const auto table = exact_log_table(1.0, 50.0);
    CHECK_THROWS_AS(block_density(table), Error);
}

TEST_CASE("pair supremum growth separates bounded from divergent coefficients") {
    const auto dist = testutil::harmonic(100000);
    const RadialGrid grid = RadialGrid::geometric(1.0, kRatio, 1e5);
    const auto table =
        IntervalMeasureTable::from_distribution(dist, grid, Provenance::Submeasure);
    // coefficient 1 matches the density: bounded remainder
    const auto bounded = pair_sup_growth(table, 1.0);
    CHECK(bounded.kind == TailGrowth::Bounded);
    CHECK(bounded.per_decade < 0.1);
    // coefficient 1/2: the supremum grows like (1/2) ln R
    const auto divergent = pair_sup_growth(table, 0.5);
    CHECK(divergent.kind == TailGrowth::Divergent);
    CHECK(divergent.per_decade == doctest::Approx(0.5 * std::log(10.0)).epsilon(0.05));
    // the discrete ladder detector agrees
    CHECK(ladder_sup_growth(table, 1.0).kind == TailGrowth::Bounded);
    CHECK(ladder_sup_growth(table, 0.5).kind == TailGrowth::Divergent);
}

TEST_CASE("submeasure axioms hold on random clouds") {
    SplitMix64 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const auto dist = testutil::random_cloud(rng, 40, 0.5, 800.0);
        const RadialGrid grid =
            RadialGrid::geometric(0.25, kRatio, dist.truncation_radius());
        const auto sub =
            IntervalMeasureTable::from_distribution(dist, grid, Provenance::Submeasure);
        const auto report = check_submeasure_axioms(sub);
        CHECK(report.l2_violations.empty());
        CHECK(std::isfinite(report.l1_bound));
        // the one-sided measure is exactly additive
        const auto right =
            IntervalMeasureTable::from_distribution(dist, grid, Provenance::Right);
        CHECK(check_submeasure_axioms(right).max_additivity_gap <= 1e-9);
    }
}

TEST_CASE("redheffer heuristics") {
    const auto dist = testutil::harmonic(10000);
    // all points sit in the sector around 0: separated points in a flat strip
    const auto along = redheffer_sufficient(dist, 0.0, kPi / 4.0);
    CHECK(along.kind == RedhefferKind::FiniteBySeparation);
    // empty sector around i
    const auto away = redheffer_sufficient(dist, kPi / 2.0, kPi / 4.0);
    CHECK(away.kind == RedhefferKind::FiniteBySum);
    // geometric moduli: the 1/|z| tail sums decay
    const auto sparse = generate(GeneratorSpec::parse("geom n=40 ratio=2"));
    CHECK(redheffer_sufficient(sparse, 0.0, kPi / 4.0).kind == RedhefferKind::FiniteBySum);
    // a quarter-plane lattice fails both sufficient conditions
    const auto lattice = generate(GeneratorSpec::parse("lattice m=200"));
    CHECK(redheffer_sufficient(lattice, kPi / 4.0, kPi / 4.0).kind ==
          RedhefferKind::Unknown);
}

TEST_CASE("rotated table builder matches rotating the distribution") {
    SplitMix64 rng(17);
    const auto dist = testutil::random_cloud(rng, 60, 1.5, 5000.0, 1e4);
    const RadialGrid grid = RadialGrid::geometric(1.0, kRatio, 1e4);
    const RotatedTableBuilder builder(dist, grid);
    for (double theta : {0.0, 0.4, kPi / 2.0, 2.9}) {
        const auto fast = builder.submeasure_table(theta);
        const auto slow = IntervalMeasureTable::from_distribution(
            rotate(dist, theta), grid, Provenance::Submeasure);
        const int m = fast.point_count();
        for (int i = 0; i < m; i += 7)
            for (int j = i + 1; j < m; j += 5)
                CHECK(fast.value(i, j) == doctest::Approx(slow.value(i, j)).epsilon(1e-9));
    }
}
