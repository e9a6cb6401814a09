#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logdens/convexgeom.hpp"
#include "logdens/generators.hpp"

using namespace logdens;

namespace {

ConvexBody unit_square() {
    return ConvexBody(Polygon{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}});
}

}  // namespace

TEST_CASE("empty body has -inf support and width") {
    const ConvexBody empty;
    CHECK(empty.is_empty());
    CHECK(support(empty, 0.3) == -kInf);
    CHECK(width(empty, 1.0) == -kInf);
    CHECK(breadth(empty) == -kInf);
    CHECK(diameter(empty) == -kInf);
}

TEST_CASE("disk width, breadth and diameter all equal the diameter") {
    const ConvexBody disk(Disk{{0.0, 0.0}, 1.5});
    SplitMix64 rng(3);
    for (int k = 0; k < 100; ++k) {
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        CHECK(width(disk, theta) == 3.0);
    }
    CHECK(breadth(disk) == 3.0);
    CHECK(diameter(disk) == 3.0);

    // translation shifts the support but not the width
    const ConvexBody moved = translate(disk, {2.0, -1.0});
    CHECK(support(moved, 0.0) == doctest::Approx(3.5));
    CHECK(width(moved, 0.7) == doctest::Approx(3.0));
}

TEST_CASE("unit square: support, width, breadth, diameter") {
    const ConvexBody sq = unit_square();
    CHECK(support(sq, 0.0) == 1.0);
    CHECK(support(sq, kPi) == 0.0);
    CHECK(support(sq, kPi / 4.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(width(sq, 0.0) == 1.0);
    CHECK(width(sq, kPi / 4.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(breadth(sq) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(diameter(sq) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("polygon validation enforces strictly convex ccw input") {
    CHECK_THROWS_AS(
        ConvexBody(Polygon{{{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}}}),  // clockwise
        Error);
    CHECK_THROWS_AS(
        ConvexBody(Polygon{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}}}),  // collinear
        Error);
    CHECK_NOTHROW(ConvexBody(Polygon{{{0.0, 0.0}}}));              // point
    CHECK_NOTHROW(ConvexBody(Polygon{{{0.0, 0.0}, {1.0, 2.0}}}));  // segment
}

TEST_CASE("degenerate bodies: point and segment") {
    const ConvexBody point(Polygon{{{2.0, 1.0}}});
    CHECK(width(point, 0.8) == doctest::Approx(0.0));
    CHECK(breadth(point) == 0.0);
    CHECK(diameter(point) == 0.0);

    const ConvexBody segment(Polygon{{{0.0, 0.0}, {3.0, 4.0}}});
    CHECK(breadth(segment) == 0.0);
    CHECK(diameter(segment) == 5.0);
    CHECK(width(segment, std::atan2(4.0, 3.0)) == doctest::Approx(5.0));
}

TEST_CASE("strip support is finite only orthogonally to the axis") {
    const Strip s{0.3, 2.0, 0.5};
    const ConvexBody strip(s);
    CHECK(support(strip, s.axis + kPi / 2.0) == doctest::Approx(1.5));
    CHECK(support(strip, s.axis - kPi / 2.0) == doctest::Approx(0.5));
    CHECK(width(strip, s.axis + kPi / 2.0) == doctest::Approx(2.0));
    CHECK(width(strip, s.axis - kPi / 2.0) == doctest::Approx(2.0));
    CHECK(breadth(strip) == 2.0);
    CHECK(diameter(strip) == kInf);
    SplitMix64 rng(9);
    for (int k = 0; k < 100; ++k) {
        double theta = rng.uniform(0.0, 2.0 * kPi);
        const double off = std::abs(std::abs(wrap_angle(theta - s.axis)) - kPi / 2.0);
        if (off < 1e-6) theta += 0.01;
        CHECK(support(strip, theta) == kInf);
        CHECK(width(strip, theta) == kInf);
    }
}

TEST_CASE("translating a strip moves its center line") {
    const ConvexBody strip(Strip{0.0, 1.0, 0.0});
    const ConvexBody moved = translate(strip, {5.0, 2.0});  // horizontal shift is invisible
    CHECK(support(moved, kPi / 2.0) == doctest::Approx(2.5));
    CHECK(support(moved, -kPi / 2.0) == doctest::Approx(-1.5));
    CHECK(width(moved, kPi / 2.0) == doctest::Approx(1.0));
}

TEST_CASE("rotation is support-equivariant") {
    const ConvexBody sq = unit_square();
    SplitMix64 rng(21);
    for (int k = 0; k < 50; ++k) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        const ConvexBody rot = rotate(sq, phi);
        CHECK(support(rot, theta + phi) == doctest::Approx(support(sq, theta)));
        CHECK(width(rot, theta + phi) == doctest::Approx(width(sq, theta)));
    }
    CHECK(breadth(rotate(sq, 0.77)) == doctest::Approx(1.0));
    CHECK(diameter(rotate(sq, 0.77)) == doctest::Approx(std::sqrt(2.0)));
    const ConvexBody strip = rotate(ConvexBody(Strip{0.0, 2.0, 0.0}), 0.4);
    CHECK(width(strip, 0.4 + kPi / 2.0) == doctest::Approx(2.0));
}

TEST_CASE("hull of a point cloud and its exact diameter") {
    SplitMix64 rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<complexd> pts;
        const int n = 3 + static_cast<int>(rng.next() % 10);
        for (int k = 0; k < n; ++k)
            pts.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
        const ConvexBody hull = ConvexBody::hull_of(pts);
        double brute = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                brute = std::max(brute, std::abs(pts[i] - pts[j]));
        CHECK(diameter(hull) == brute);
        // every input point lies inside: support dominates each projection
        for (double theta = 0.0; theta < 2.0 * kPi; theta += 0.37) {
            const complexd u = unit_dir(theta);
            for (complexd p : pts)
                CHECK(support(hull, theta) >=
                      p.real() * u.real() + p.imag() * u.imag() - 1e-12);
        }
    }
}

TEST_CASE("hull collapses collinear clouds to a segment") {
    std::vector<complexd> pts = {{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}};
    const ConvexBody hull = ConvexBody::hull_of(pts);
    const auto& poly = std::get<Polygon>(hull.shape());
    CHECK(poly.vertices.size() == 2);
    CHECK(diameter(hull) == doctest::Approx(3.0 * std::sqrt(2.0)));
    CHECK(breadth(hull) == 0.0);
}

TEST_CASE("support_homogeneous scales with the modulus") {
    const ConvexBody sq = unit_square();
    CHECK(support_homogeneous(sq, {0.0, 0.0}) == 0.0);
    CHECK(support_homogeneous(sq, {2.0, 0.0}) == doctest::Approx(2.0));
    CHECK(support_homogeneous(sq, {0.0, -3.0}) == doctest::Approx(0.0));
    CHECK(support_homogeneous(sq, {3.0, 3.0}) == doctest::Approx(6.0));
}
