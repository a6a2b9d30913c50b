#include "doctest.h"

#include "freeset/designs.hpp"
#include "freeset/polynomial.hpp"
#include "freeset/search.hpp"
#include "freeset/zn.hpp"
#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

using freeset::designs::build_design;
using freeset::designs::default_tolerance;
using freeset::designs::DesignPointSet;
using freeset::designs::dgs_bound;
using freeset::designs::dim_harm;
using freeset::designs::GeneratorSet;
using freeset::designs::harmonic_basis;
using freeset::designs::read_csv;
using freeset::designs::trig_zero_sum;
using freeset::designs::verify_index;
using freeset::designs::verify_strength;
using freeset::designs::write_csv;

namespace {

bool generators_are_t_free(std::uint64_t n, std::uint32_t t,
                           const std::vector<std::uint64_t>& a) {
    std::vector<std::uint64_t> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    freeset::zn::CyclicContext ctx{n, t};
    freeset::zn::ResidueSet s(n, sorted);
    return freeset::zn::is_t_free(ctx, s).t_free();
}

}  // namespace

TEST_CASE("minimum point counts for designs on spheres") {
    // t=2 needs d+2 points, t=3 needs 2(d+1).
    for (std::uint32_t d = 1; d <= 50; ++d) {
        CHECK(dgs_bound(2, d) == d + 2);
        CHECK(dgs_bound(3, d) == 2 * (d + 1));
    }
    CHECK(dgs_bound(1, 5) == 2);
    CHECK(dgs_bound(11, 23) == 196560);
}

TEST_CASE("harmonic dimensions match the closed formula") {
    for (std::uint32_t d = 1; d <= 8; ++d) CHECK(dim_harm(d, 1) == d + 1);
    CHECK(dim_harm(3, 2) == 9);
    CHECK(dim_harm(2, 3) == 7);
    CHECK(dim_harm(3, 3) == 16);
    CHECK(dim_harm(1, 2) == 2);
    CHECK(dim_harm(1, 3) == 2);
}

TEST_CASE("harmonic bases have the right size and vanish under the laplacian") {
    for (std::uint32_t d = 1; d <= 6; ++d) {
        for (std::uint32_t k = 1; k <= 3; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            auto basis = harmonic_basis(d, k);
            CHECK(basis.size() == dim_harm(d, k));
            for (const auto& p : basis) {
                CHECK(p.homogeneous_degree() == k);
                CHECK(p.laplacian().zero());
            }
        }
    }
    CHECK_THROWS_AS(harmonic_basis(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(harmonic_basis(3, 0), std::invalid_argument);
}

TEST_CASE("circle harmonics of degree two are the classical pair") {
    auto basis = harmonic_basis(1, 2);
    REQUIRE(basis.size() == 2);
    // x0*x1 and x0^2 - x1^2, in that order (products then differences).
    CHECK(basis[0].to_string() == "x0*x1");
    CHECK(basis[1].to_string() == "x0^2 - x1^2");
}

TEST_CASE("build_design places points by angle") {
    SUBCASE("n=4 a=(1) walks the square") {
        auto x = build_design({4, {1}});
        CHECK(x.d == 1);
        CHECK(x.m == 1);
        REQUIRE(x.points.size() == 4);
        // Points i=1..4 at angles pi/2, pi, 3pi/2, 2pi.
        CHECK(x.points[0][0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(x.points[0][1] == doctest::Approx(1.0));
        CHECK(x.points[1][0] == doctest::Approx(-1.0));
        CHECK(x.points[1][1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(x.points[2][0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(x.points[2][1] == doctest::Approx(-1.0));
        CHECK(x.points[3][0] == doctest::Approx(1.0));
        CHECK(x.points[3][1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(x.warnings.empty());
    }
    SUBCASE("all points sit on the unit sphere") {
        auto x = build_design({10, {1, 3}});
        CHECK(x.d == 3);
        REQUIRE(x.points.size() == 10);
        for (const auto& p : x.points) {
            double norm2 = 0;
            for (double c : p) norm2 += c * c;
            CHECK(std::abs(norm2 - 1.0) <= 1e-12);
        }
    }
    SUBCASE("generator divisible by n degenerates with a warning") {
        auto x = build_design({6, {6}});
        REQUIRE(x.points.size() == 6);
        for (const auto& p : x.points) {
            CHECK(p[0] == doctest::Approx(1.0));
            CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-12));
        }
        CHECK(!x.warnings.empty());
    }
    SUBCASE("repeated generators warn") {
        auto x = build_design({10, {3, 3}});
        CHECK(!x.warnings.empty());
    }
    SUBCASE("common divisor with n warns about repeated points") {
        auto x = build_design({10, {2, 4}});
        CHECK(!x.warnings.empty());
    }
    SUBCASE("invalid inputs throw") {
        CHECK_THROWS_AS(build_design({0, {1}}), std::invalid_argument);
        CHECK_THROWS_AS(build_design({10, {}}), std::invalid_argument);
        CHECK_THROWS_AS(build_design({10, {0}}), std::invalid_argument);
    }
}

TEST_CASE("trig sums over full residue cycles") {
    auto [s1, c1] = trig_zero_sum(7, 3);
    CHECK(std::abs(s1) <= 1e-12);
    CHECK(std::abs(c1) <= 1e-12);
    auto [s2, c2] = trig_zero_sum(7, 14);
    CHECK(std::abs(s2) <= 1e-12);
    CHECK(c2 == doctest::Approx(7.0));
    auto [s3, c3] = trig_zero_sum(1, 1);
    CHECK(std::abs(s3) <= 1e-12);
    CHECK(c3 == doctest::Approx(1.0));
}

TEST_CASE("strength verification on known designs") {
    SUBCASE("the square is a 1-design on the circle") {
        auto x = build_design({4, {1}});
        auto r = verify_strength(x, 1, 1e-12);
        CHECK(r.pass);
        CHECK(r.max_residual <= 1e-12);
        CHECK(r.residuals.size() == 2);
    }
    SUBCASE("3-free generators give a 3-design") {
        auto x = build_design({10, {1, 3}});
        auto r = verify_strength(x, 3, default_tolerance(10));
        CHECK(r.pass);
        // Bases of degree 1, 2, 3 in 4 variables: 4 + 9 + 16 polynomials.
        CHECK(r.residuals.size() == 4 + 9 + 16);
        CHECK(!r.worst.empty());
    }
    SUBCASE("second moments are n/(2m) scaled to the mean") {
        auto x = build_design({10, {1, 3}});
        auto r = verify_strength(x, 2, default_tolerance(10));
        REQUIRE(r.second_moments.size() == 4);
        for (double sm : r.second_moments) CHECK(sm == doctest::Approx(10.0 / 4.0));
        CHECK(r.second_moment_spread <= 1e-10);
    }
    SUBCASE("degrees beyond three are rejected") {
        auto x = build_design({10, {1, 3}});
        CHECK_THROWS_AS(verify_strength(x, 4, 1e-9), std::invalid_argument);
    }
    SUBCASE("tolerance must be positive") {
        auto x = build_design({4, {1}});
        CHECK_THROWS_AS(verify_strength(x, 1, 0.0), std::invalid_argument);
    }
}

TEST_CASE("index verification compares monomial means to sphere averages") {
    SUBCASE("square, degree 2: coordinate squares average one half") {
        auto x = build_design({4, {1}});
        auto r = verify_index(x, 2, 1e-12);
        CHECK(r.pass);
        for (const auto& e : r.residuals) {
            if (e.label == "x0^2") CHECK(e.value == doctest::Approx(0.5));
            if (e.label == "x0*x1") CHECK(std::abs(e.value) <= 1e-12);
        }
    }
    SUBCASE("generators (1,3) mod 8 fail index 4 on x1*x3^3") {
        auto x = build_design({8, {1, 3}});
        auto r = verify_index(x, 4, 1e-9);
        CHECK(!r.pass);
        bool found = false;
        for (const auto& e : r.residuals) {
            if (e.label == "x1*x3^3") {
                found = true;
                // Mean -1/32, so the sum over the 8 points is exactly -1/4.
                CHECK(e.value == doctest::Approx(-1.0 / 32.0).epsilon(1e-9));
                CHECK(e.value * 8 == doctest::Approx(-0.25).epsilon(1e-9));
                CHECK(e.expected == doctest::Approx(0.0));
            }
        }
        CHECK(found);
    }
    SUBCASE("generators (1,3) mod 10 also fail index 4") {
        auto x = build_design({10, {1, 3}});
        auto r = verify_index(x, 4, 1e-9);
        CHECK(!r.pass);
    }
    SUBCASE("odd-degree monomials average to zero for symmetric sets") {
        auto x = build_design({10, {1, 3}});
        auto r = verify_index(x, 3, default_tolerance(10));
        CHECK(r.pass);
        for (const auto& e : r.residuals) CHECK(e.expected == 0.0);
    }
}

TEST_CASE("pair energies and second moments follow from the construction") {
    // Sum over points of x_{2v}^2 + x_{2v+1}^2 is n/m for every pair v,
    // regardless of the generators.
    for (auto g : std::vector<GeneratorSet>{{12, {1, 2}}, {9, {2, 5, 7}}, {15, {3, 5}}}) {
        auto x = build_design(g);
        std::uint32_t m = x.m;
        for (std::uint32_t v = 0; v < m; ++v) {
            double e = 0;
            for (const auto& p : x.points)
                e += p[2 * v] * p[2 * v] + p[2 * v + 1] * p[2 * v + 1];
            CHECK(e == doctest::Approx(static_cast<double>(g.n) / m).epsilon(1e-10));
        }
    }
}

TEST_CASE("k-free generators annihilate low odd-degree monomial sums") {
    // Random generator sets certified k-free must make every monomial of
    // odd degree <= k sum to (numerically) zero over the point set.
    std::mt19937_64 rng(20260817);
    int done = 0;
    while (done < 12) {
        std::uint64_t n = 40 + rng() % 161;
        std::uint32_t m = 2 + rng() % 2;
        std::uint32_t t = 3 + 2 * (rng() % 2);
        std::vector<std::uint64_t> a;
        while (a.size() < m) {
            std::uint64_t c = 1 + rng() % (n - 1);
            if (std::find(a.begin(), a.end(), c) == a.end()) a.push_back(c);
        }
        if (!generators_are_t_free(n, t, a)) continue;
        ++done;
        CAPTURE(n);
        CAPTURE(t);
        auto x = build_design({n, a});
        for (std::uint32_t k = 1; k <= t; k += 2) {
            auto r = verify_index(x, k, default_tolerance(n));
            CHECK(r.pass);
        }
    }
}

TEST_CASE("strength passes imply index passes at lower degrees") {
    auto x = build_design({14, {1, 3}});
    REQUIRE(generators_are_t_free(14, 3, {1, 3}));
    auto s = verify_strength(x, 3, default_tolerance(14));
    CHECK(s.pass);
    for (std::uint32_t k = 1; k <= 3; ++k) {
        auto r = verify_index(x, k, default_tolerance(14));
        CHECK(r.pass);
    }
}

TEST_CASE("a 5-free generator set yields a 5-design checked by index") {
    auto mr = freeset::search::exact_max(100, 5);
    REQUIRE(mr.status == freeset::search::SearchStatus::exact);
    REQUIRE(mr.size == 4);
    auto x = build_design({100, mr.witness.elements()});
    CHECK(x.d == 7);
    // 5-freeness forces every odd-degree monomial sum through degree 5 to
    // vanish.  Even degrees follow the product-of-circles moments instead
    // of the sphere's, so only the odd indices are claimed.
    for (std::uint32_t k = 1; k <= 5; k += 2) {
        auto r = verify_index(x, k, default_tolerance(100));
        CAPTURE(k);
        CHECK(r.pass);
    }
}

TEST_CASE("csv round trip preserves every bit") {
    auto x = build_design({10, {1, 3}});
    std::ostringstream out;
    write_csv(x, out);
    std::istringstream in(out.str());
    auto y = read_csv(in);
    CHECK(y.d == x.d);
    CHECK(y.n == x.n);
    CHECK(y.m == x.m);
    REQUIRE(y.points.size() == x.points.size());
    for (std::size_t i = 0; i < x.points.size(); ++i) {
        REQUIRE(y.points[i].size() == x.points[i].size());
        for (std::size_t j = 0; j < x.points[i].size(); ++j)
            CHECK(y.points[i][j] == x.points[i][j]);
    }
    REQUIRE(y.generator.has_value());
    CHECK(y.generator->n == 10);
    CHECK(y.generator->a == std::vector<std::uint64_t>{1, 3});

    // Residuals computed from the file match the in-memory ones exactly.
    auto r0 = verify_strength(x, 3, default_tolerance(10));
    auto r1 = verify_strength(y, 3, default_tolerance(10));
    REQUIRE(r0.residuals.size() == r1.residuals.size());
    for (std::size_t i = 0; i < r0.residuals.size(); ++i)
        CHECK(r0.residuals[i].residual == r1.residuals[i].residual);
}

TEST_CASE("csv reading copes with plain and malformed input") {
    SUBCASE("headerless data is accepted") {
        std::istringstream in("1,0\n0,1\n-1,0\n0,-1\n");
        auto x = read_csv(in);
        CHECK(x.n == 4);
        CHECK(x.m == 1);
        CHECK(x.d == 1);
        CHECK(!x.generator.has_value());
    }
    SUBCASE("odd column counts are rejected") {
        std::istringstream in("1,0,5\n");
        CHECK_THROWS_AS(read_csv(in), std::runtime_error);
    }
    SUBCASE("ragged rows are rejected") {
        std::istringstream in("1,0\n1,0,0,1\n");
        CHECK_THROWS_AS(read_csv(in), std::runtime_error);
    }
    SUBCASE("header inconsistent with data is rejected") {
        std::istringstream in("# d=3 n=4 m=2 gens=1,3\n1,0\n0,1\n-1,0\n0,-1\n");
        CHECK_THROWS_AS(read_csv(in), std::runtime_error);
    }
    SUBCASE("empty input is rejected") {
        std::istringstream in("");
        CHECK_THROWS_AS(read_csv(in), std::runtime_error);
    }
}
