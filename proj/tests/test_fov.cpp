#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrange/fixtures.hpp"
#include "nrange/fov.hpp"
#include "nrange/oracles.hpp"
#include "nrange/rng.hpp"

using namespace nrange;

TEST_CASE("support points") {
    const ComplexMatrix d{{1.0, 0.0}, {0.0, 3.0}};
    const auto s = fov::support_point(d, 0.0);
    CHECK(s.support == doctest::Approx(3.0));
    CHECK(std::abs(s.point - 3.0) < 1e-12);

    for (double th : {0.0, 1.0, 2.5, 4.0}) {
        const auto si = fov::support_point(ComplexMatrix::identity(3), th);
        CHECK(std::abs(si.point - 1.0) < 1e-12);
        CHECK(si.support == doctest::Approx(std::cos(th)));
    }

    const ComplexMatrix nil{{0.0, 2.0}, {0.0, 0.0}};
    for (double th : angle_grid(16)) {
        const auto sn = fov::support_point(nil, th);
        CHECK(std::abs(sn.point) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((std::polar(1.0, -th) * sn.point).real() == doctest::Approx(sn.support).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fov::support_point(zeros(2, 3), 0.0), InputError);
}

TEST_CASE("hermitian matrices give a segment") {
    const Region r = fov::fov_region(ComplexMatrix{{1.0, 0.0}, {0.0, 3.0}});
    REQUIRE(r.kind() == RegionKind::Segment);
    const auto& s = r.as<shape::Segment>();
    CHECK(std::min(std::abs(s.a - 1.0), std::abs(s.b - 1.0)) < 1e-12);
    CHECK(std::min(std::abs(s.a - 3.0), std::abs(s.b - 3.0)) < 1e-12);
    CHECK(fov::fov_region(ComplexMatrix::identity(2)).kind() == RegionKind::Point);
}

TEST_CASE("nilpotent 2x2 has a circular disc of radius |a|") {
    for (const cplx a : {cplx{1.0}, cplx{0.5, -2.0}}) {
        const ComplexMatrix m{{0.0, 2.0 * a}, {0.0, 0.0}};
        const BoundaryCurve c = fov::fov_boundary(m);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c.support[i] - std::abs(a)) < 1e-12);
        // Sampled hull approaches the same radius from inside.
        const auto mc = oracles::mc_fov_samples(m, 100000, 5, false);
        CHECK(mc.sup_abs <= std::abs(a) + 1e-12);
        CHECK(mc.sup_abs > 0.99 * std::abs(a));
    }
}

TEST_CASE("eigenvalues and samples lie inside the boundary") {
    for (std::uint64_t t = 0; t < 50; ++t) {
        Rng r(mix_seed(21, t));
        const auto n = static_cast<std::size_t>(2 + r.uniform() * 7);
        const ComplexMatrix a = random_gaussian(n, n, mix_seed(22, t));
        const Region b = Region::boundary(fov::fov_boundary(a, 360));
        for (const cplx ev : eigenvalues(a)) CHECK(region_contains(b, ev, 1e-8));
        if (t < 5) {
            for (const cplx z : oracles::mc_fov_samples(a, 2000, t).points) CHECK(region_contains(b, z, 1e-8));
        }
    }
}

TEST_CASE("normal matrices: boundary equals the eigenvalue hull") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 5;
        const ComplexMatrix u = random_unitary(n, mix_seed(31, t));
        std::vector<cplx> lam;
        Rng r(mix_seed(32, t));
        for (std::size_t i = 0; i < n; ++i) lam.push_back(r.complex_normal() * 3.0);
        const ComplexMatrix a = u * ComplexMatrix::diagonal(lam, n, n) * u.adjoint();
        const BoundaryCurve c = fov::fov_boundary(a);
        const BoundaryCurve h = hull_curve(lam, c.angles);
        CHECK(std::abs(support_gap(c, h)) <= 1e-8);
        CHECK(std::abs(support_gap(h, c)) <= 1e-8);
    }
}

TEST_CASE("rotation equivariance") {
    const ComplexMatrix a = random_gaussian(4, 4, 44);
    const double phi = 2.0 * kPi * 30 / 720;  // whole number of grid steps
    const BoundaryCurve c = fov::fov_boundary(a);
    const BoundaryCurve r = fov::fov_boundary(std::polar(1.0, phi) * a);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(r.support[(i + 30) % 720] - c.support[i]) < 1e-9);
}

TEST_CASE("sharp points") {
    const ComplexMatrix d{{1.0, 0.0}, {0.0, 3.0}};
    const BoundaryCurve c = fov::fov_boundary(d);
    const auto sp = sharp_points(c, fov::default_min_cone_width(720), fov::default_cluster_tol(d));
    REQUIRE(sp.size() == 2);
    for (const auto& p : sp) {
        CHECK((std::abs(p.location - 1.0) < 1e-12 || std::abs(p.location - 3.0) < 1e-12));
        CHECK(std::abs(p.normal_cone_width - kPi) <= 2 * 2 * kPi / 720);
    }

    const ComplexMatrix nil{{0.0, 2.0}, {0.0, 0.0}};
    CHECK(sharp_points(fov::fov_boundary(nil), fov::default_min_cone_width(720), fov::default_cluster_tol(nil)).empty());
}

TEST_CASE("compressed example has its corner at 5i") {
    const ComplexMatrix l = fixtures::a2_frame().adjoint() * fixtures::a2();
    const BoundaryCurve c = fov::fov_boundary(l);
    double nearest = 1e9;
    for (const cplx z : c.points) nearest = std::min(nearest, std::abs(z - cplx{0.0, 5.0}));
    CHECK(nearest < 1e-4);
    CHECK(region_contains(Region::boundary(c), {0.0, 5.0}, 1e-8));

    const auto sp = fov::sharp_eigenvalues(l, c, fov::default_min_cone_width(720), 1e-6 * spectral_norm(fixtures::a2()));
    bool found = false;
    for (const auto& p : sp) found = found || std::abs(p.location - cplx{0.0, 5.0}) <= 1e-6;
    CHECK(found);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(fov::fov_boundary(zeros(2, 3)), InputError);
    CHECK_THROWS_AS(fov::fov_boundary(ComplexMatrix::identity(2), 4), InputError);
}
