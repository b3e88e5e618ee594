#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrange/geometry.hpp"

using namespace nrange;

TEST_CASE("factories normalize degenerate shapes") {
    CHECK(Region::disc(1.0, 0.0).kind() == RegionKind::Point);
    CHECK(Region::circle(1.0, 0.0).kind() == RegionKind::Point);
    CHECK(Region::annulus(0.0, 2.0, 2.0).kind() == RegionKind::Circle);
    CHECK(Region::annulus(0.0, 0.0, 2.0).kind() == RegionKind::Disc);
    CHECK(Region::annulus(0.0, 0.0, 0.0).kind() == RegionKind::Point);
    CHECK(Region::segment(2.0, 2.0).kind() == RegionKind::Point);
    CHECK(Region::ellipse(1.0, 1.0, 4.0).kind() == RegionKind::Disc);
    CHECK(Region::ellipse(1.0, 1.0, 4.0).outer_radius() == doctest::Approx(3.0));
    CHECK(Region::ellipse(0.0, 3.0, 3.0).kind() == RegionKind::Segment);
    CHECK_THROWS_AS(Region::ellipse(0.0, 3.0, 2.0), InputError);
    CHECK_THROWS_AS(Region::disc(0.0, -1.0), InputError);
    CHECK_THROWS_AS(Region::annulus(0.0, 2.0, 1.0), InputError);
}

TEST_CASE("kind names round trip") {
    for (int i = 0; i <= static_cast<int>(RegionKind::Boundary); ++i) {
        const auto k = static_cast<RegionKind>(i);
        CHECK(region_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(region_kind_from_string("blob"), InputError);
}

TEST_CASE("containment") {
    const Region d = Region::disc({1.0, 1.0}, 2.0);
    CHECK(region_contains(d, {1.0, 3.0}, 1e-12));
    CHECK_FALSE(region_contains(d, {1.0, 3.001}, 1e-12));

    const Region a = Region::annulus(0.0, 1.0, 2.0);
    CHECK_FALSE(region_contains(a, 0.5, 1e-12));
    CHECK(region_contains(a, {0.0, -1.5}, 1e-12));
    CHECK_FALSE(region_contains(a, 2.1, 1e-12));

    const Region c = Region::circle(0.0, 1.0);
    CHECK(region_contains(c, std::polar(1.0, 0.3), 1e-12));
    CHECK_FALSE(region_contains(c, 0.0, 1e-12));

    const Region s = Region::segment(0.0, {2.0, 2.0});
    CHECK(region_contains(s, {1.0, 1.0}, 1e-12));
    CHECK_FALSE(region_contains(s, {1.0, 1.1}, 1e-12));

    // Foci 0 and 3, major axis 5: semi-axes 2.5 and 2 about 1.5.
    const Region e = Region::ellipse(0.0, 3.0, 5.0);
    CHECK(region_contains(e, 4.0, 1e-12));
    CHECK(region_contains(e, {1.5, 2.0}, 1e-12));
    CHECK_FALSE(region_contains(e, {1.5, 2.01}, 1e-12));

    CHECK_FALSE(region_contains(Region::empty(), 0.0, 1.0));
}

TEST_CASE("support functions") {
    const Region e = Region::ellipse(0.0, 3.0, 5.0);
    CHECK(region_support(e, 0.0) == doctest::Approx(4.0));
    CHECK(region_support(e, kPi / 2) == doctest::Approx(2.0));
    CHECK(region_support(e, kPi) == doctest::Approx(1.0));
    CHECK(region_support(Region::disc({0.0, 1.0}, 2.0), kPi / 2) == doctest::Approx(3.0));
    CHECK(region_support(Region::annulus(0.0, 1.0, 2.0), 1.0) == doctest::Approx(2.0));
    CHECK(region_support(Region::segment(-1.0, {0.0, 2.0}), kPi) == doctest::Approx(1.0));
    CHECK(std::isinf(region_support(Region::empty(), 0.0)));
}

TEST_CASE("support gap between sampled shapes") {
    const auto g = angle_grid(360);
    const BoundaryCurve small = sample_region(Region::disc(0.0, 1.0), g);
    const BoundaryCurve big = sample_region(Region::disc(0.0, 1.5), g);
    CHECK(support_gap(small, big) == doctest::Approx(-0.5));
    CHECK(support_gap(big, small) == doctest::Approx(0.5));

    // Square hull vs its circumscribed disc.
    const CVector sq{{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}};
    const BoundaryCurve h = hull_curve(sq, g);
    CHECK(h.support_at(0.0) == doctest::Approx(1.0));
    CHECK(h.support_at(kPi / 4) == doctest::Approx(std::sqrt(2.0)));
    CHECK(support_gap(h, sample_region(Region::disc(0.0, std::sqrt(2.0)), g)) <= 1e-12);
    CHECK(convexity_defect(h) <= 1e-12);
    CHECK(support_gap(rebuild_curve(h), h) <= 1e-12);
}

TEST_CASE("boundary region containment uses support dominance") {
    const CVector tri{0.0, 2.0, {0.0, 2.0}};
    const Region r = Region::boundary(hull_curve(tri, angle_grid(720)));
    CHECK(region_contains(r, {0.5, 0.5}, 1e-12));
    CHECK(region_contains(r, {1.0, 1.0}, 1e-9));
    CHECK_FALSE(region_contains(r, {1.1, 1.1}, 1e-9));
}

TEST_CASE("sharp points of polygons and smooth curves") {
    const auto g = angle_grid(720);
    const CVector tri{0.0, 2.0, {0.0, 2.0}};
    const auto corners = sharp_points(hull_curve(tri, g), 3 * 2 * kPi / 720, 1e-9);
    REQUIRE(corners.size() == 3);
    for (const auto& c : corners) {
        double best = 1e9;
        for (const cplx v : tri) best = std::min(best, std::abs(v - c.location));
        CHECK(best < 1e-12);
        CHECK(c.normal_cone_width > 0.5);
    }
    CHECK(sharp_points(sample_region(Region::disc(0.0, 1.0), g), 3 * 2 * kPi / 720, 1e-9).empty());

    const auto point = sharp_points(sample_region(Region::point({1.0, 2.0}), g), 0.1, 1e-9);
    REQUIRE(point.size() == 1);
    CHECK(point[0].normal_cone_width == doctest::Approx(2 * kPi));
}
