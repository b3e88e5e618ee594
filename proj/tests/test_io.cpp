#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrange/fixtures.hpp"
#include "nrange/fov.hpp"
#include "nrange/io.hpp"
#include "nrange/rankk.hpp"
#include "nrange/rng.hpp"

using namespace nrange;

TEST_CASE("complex literals") {
    CHECK(io::parse_complex("3") == cplx{3.0, 0.0});
    CHECK(io::parse_complex("-2.5") == cplx{-2.5, 0.0});
    CHECK(io::parse_complex("1+2i") == cplx{1.0, 2.0});
    CHECK(io::parse_complex(" 1 - 2i ") == cplx{1.0, -2.0});
    CHECK(io::parse_complex("-4i") == cplx{0.0, -4.0});
    CHECK(io::parse_complex("i") == cplx{0.0, 1.0});
    CHECK(io::parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(io::parse_complex("6-i") == cplx{6.0, -1.0});
    CHECK(io::parse_complex("1e-3+2.5e1i") == cplx{1e-3, 25.0});
    CHECK(io::parse_complex("+0.5") == cplx{0.5, 0.0});
    for (const char* bad : {"", "abc", "1+", "1+2", "2i+1", "1++2i", "1 2", "nan", "inf", "1+2j"}) {
        CHECK_THROWS_AS(io::parse_complex(bad), io::ParseError);
    }
}

TEST_CASE("matrix files") {
    const ComplexMatrix j = io::parse_matrix(R"({"rows": 2, "cols": 3,
        "data": [[6, 1], [0, 0], [0.5, 0], [-4, 0], [-3, -6], [0, 0]]})");
    CHECK(j == fixtures::a1());

    const ComplexMatrix c = io::parse_matrix("2,3\n6+i, 0, 0.5\n-4, -3-6i, 0\n");
    CHECK(c == fixtures::a1());
    CHECK(io::parse_matrix("2,2\n1,2,3,4") == ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}});

    CHECK(io::parse_matrix(io::matrix_to_json(fixtures::a2())) == fixtures::a2());
    const ComplexMatrix r = random_gaussian(3, 4, 7);
    CHECK(io::parse_matrix(io::matrix_to_json(r)) == r);

    for (const char* bad : {"", "{", R"({"rows": 2, "cols": 2, "data": [[1, 0]]})",
                            R"({"rows": 1, "cols": 1, "data": [[1]]})", R"({"rows": 0, "cols": 1, "data": []})",
                            "2,2\n1,2,3", "2\n1,2", "x,y\n1", "1,1\nfoo"}) {
        CHECK_THROWS_AS(io::parse_matrix(bad), io::ParseError);
    }
}

TEST_CASE("region files round trip exactly") {
    const ComplexMatrix a = random_gaussian(3, 3, 11);
    const std::vector<Region> regions{
        Region::empty(),
        Region::point({0.1, 1.0 / 3.0}),
        Region::segment({-1.0 / 7.0, 2.0}, {3.0, std::sqrt(2.0)}),
        Region::disc({0.0, 0.0}, std::acos(-1.0)),
        Region::circle({1e-300, -2.0}, 1.0 / 3.0),
        Region::annulus(0.0, 0.1, 2.0 / 3.0),
        Region::ellipse(0.0, {1.0 / 3.0, 0.2}, 1.7),
        fov::fov_region(a, 64),
    };
    for (const Region& r : regions) {
        io::RegionFile f{r, {"phik", std::size_t{2}, singular_values(a), io::kToolVersion}};
        const io::RegionFile g = io::region_from_json(io::region_to_json(f));
        REQUIRE(g.region.kind() == r.kind());
        CHECK(io::region_to_json(g) == io::region_to_json(f));
        CHECK(g.meta.sigma == f.meta.sigma);
        CHECK(g.meta.k == f.meta.k);
        Rng rng(3);
        for (int i = 0; i < 50; ++i) {
            const cplx z = 3.0 * rng.complex_normal();
            CHECK(region_contains(g.region, z, 1e-12) == region_contains(r, z, 1e-12));
        }
    }
    const io::RegionFile nok{Region::disc(0.0, 1.0), {"w", std::nullopt, {1.0}, io::kToolVersion}};
    CHECK_FALSE(io::region_from_json(io::region_to_json(nok)).meta.k.has_value());

    CHECK_THROWS_AS(io::region_from_json(R"({"kind": "blob", "meta": {}})"), io::ParseError);
    CHECK_THROWS_AS(io::region_from_json(R"({"kind": "disc", "center": [0, 0], "meta": {}})"), io::ParseError);
    CHECK_THROWS_AS(io::region_from_json("not json"), io::ParseError);
}

TEST_CASE("file errors") {
    CHECK_THROWS_AS(io::read_text("/nonexistent/dir/file.json"), io::IoError);
    CHECK_THROWS_AS(io::write_text("/nonexistent/dir/file.json", "x"), io::IoError);
}
