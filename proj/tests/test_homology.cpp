#include <doctest.h>

#include <numeric>

#include "ffl/errors.hpp"
#include "ffl/homology.hpp"

using namespace ffl;

TEST_SUITE("homology") {

TEST_CASE("fibered cone membership") {
    CHECK(is_fibered(2, 6, 1));
    CHECK_FALSE(is_fibered(1, 1, 1));
    CHECK(is_fibered(3, 5, 0));
    CHECK(is_fibered(1, 2, -3));
    CHECK_FALSE(is_fibered(0, 3, -1));
    CHECK_FALSE(is_fibered(3, -1, -2));
    CHECK_THROWS_AS(require_fibered({1, 1, 1}), DomainError);
    CHECK_NOTHROW(require_fibered({2, 6, 1}));
}

TEST_CASE("norm") {
    CHECK(norm({2, 6, 1}) == 7);
    CHECK(norm({1, 1, 0}) == 2);
    CHECK(norm({3, 5, 0}) == 8);
    CHECK_THROWS_AS(norm({0, 0, 0}), DomainError);
}

TEST_CASE("ijk conversions") {
    CHECK(to_xyz({1, 4, 1, Sign::plus}) == FiberedClass{2, 6, 1});
    CHECK(to_xyz({3, 1, 1, Sign::minus}) == FiberedClass{1, 2, -3});
    CHECK(to_xyz({0, 2, 3, Sign::plus}) == FiberedClass{3, 5, 0});
    CHECK(to_xyz({0, 2, 3, Sign::minus}) == FiberedClass{3, 5, 0});

    CHECK(from_xyz({2, 6, 1}) == IjkClass{1, 4, 1, Sign::plus});
    CHECK(from_xyz({1, 2, -3}) == IjkClass{3, 1, 1, Sign::minus});
    CHECK(from_xyz({3, 5, 0}) == IjkClass{0, 2, 3, Sign::minus});
    CHECK_THROWS_AS(from_xyz({6, 2, 1}), DomainError);

    CHECK(IjkClass{1, 4, 1, Sign::plus}.to_string() == "(1,4,1)+");
    CHECK(IjkClass{3, 1, 1, Sign::minus}.to_string() == "(3,1,1)-");
    CHECK(IjkClass{0, 2, 3, Sign::plus}.to_string() == "(2,3)0");
}

TEST_CASE("primitivity") {
    CHECK(is_primitive({2, 6, 1}));
    CHECK_FALSE(is_primitive({4, 6, 2}));
    CHECK(is_primitive({3, 5, 0}));
    try {
        fiber_topology({4, 6, 2});
        FAIL("expected NotPrimitiveError");
    } catch (const NotPrimitiveError& e) {
        CHECK(e.gcd() == 2);
    }
}

TEST_CASE("boundary gcd convention") {
    CHECK(boundary_gcd(0, 7) == 7);
    CHECK(boundary_gcd(0, -7) == 7);
    CHECK(boundary_gcd(4, 6) == 2);
    CHECK(boundary_gcd(-3, 9) == 3);
}

TEST_CASE("fiber topology examples") {
    const auto t = fiber_topology({2, 6, 1});
    CHECK(t.genus == 2);
    CHECK(t.boundary_alpha == 1);
    CHECK(t.boundary_beta == 3);
    CHECK(t.boundary_gamma == 1);
    CHECK(t.prongs_alpha == 2);
    CHECK(t.prongs_beta == 2);
    CHECK(t.prongs_gamma == 6);
    CHECK(t.orientable);
    CHECK(t.surface_name() == "Sigma_{2,5}");

    const auto u = fiber_topology({3, 5, 0});
    CHECK(u.genus == 0);
    CHECK(u.boundary_alpha == 1);
    CHECK(u.boundary_beta == 1);
    CHECK(u.boundary_gamma == 8);
    CHECK(u.prongs_alpha == 3);
    CHECK(u.prongs_beta == 5);
    CHECK(u.prongs_gamma == 1);
    CHECK_FALSE(u.orientable);
    CHECK(u.surface_name() == "Sigma_{0,10}");

    const auto w = fiber_topology({4, 10, 1});
    CHECK(w.genus == 4);
    CHECK(w.boundary_total() == 7);
    CHECK(w.boundary(Cusp::beta) == 5);
    CHECK(w.prongs(Cusp::beta) == 2);
}

TEST_CASE("swap and projection") {
    CHECK(swap_symmetry({2, 6, 1}) == FiberedClass{6, 2, 1});
    CHECK(swap_symmetry({1, 2, -3}) == FiberedClass{2, 1, -3});
    CHECK(swap_symmetry({3, 5, 0}) == FiberedClass{5, 3, 0});

    CHECK(projection_to_face({2, 6, 1}) == FaceCoordinates{Rational(2, 7), Rational(6, 7)});
    CHECK(projection_to_face({1, 1, 0}) == FaceCoordinates{Rational(1, 2), Rational(1, 2)});
    // (g, 2g+2, 1) tends to [1/3, 2/3]
    const auto far = projection_to_face({1000000, 2000002, 1});
    CHECK(far.u.to_double() == doctest::Approx(1.0 / 3).epsilon(1e-5));
    CHECK(far.v.to_double() == doctest::Approx(2.0 / 3).epsilon(1e-5));
}

TEST_CASE("boundary slopes") {
    const auto s = boundary_slopes({2, 6, 1});
    CHECK(s[0] == Slope::finite(Rational(-7, 2)));
    CHECK(s[1] == Slope::finite(Rational(-1, 2)));
    CHECK(s[2] == Slope::finite(Rational(-8)));
    for (std::int64_t g = 2; g <= 20; ++g)
        CHECK(boundary_slope({g, 2 * g + 2, 1}, Cusp::beta) == Slope::finite(Rational(-1, 2)));
    CHECK(boundary_slope({3, 5, 0}, Cusp::gamma).is_infinite());
    CHECK(boundary_slope({3, 5, 0}, Cusp::gamma).to_string() == "inf");
}

TEST_CASE("slope parsing") {
    CHECK(Slope::parse("1/-2") == Slope::finite(Rational(-1, 2)));
    CHECK(Slope::parse("-1/2") == Slope::finite(Rational(-1, 2)));
    CHECK(Slope::parse("inf").is_infinite());
    CHECK(Slope::parse("1/0").is_infinite());
    CHECK(Slope::parse("3") == Slope::finite(Rational(3)));
    CHECK_THROWS(Slope::parse("x"));
    CHECK_THROWS(Slope::parse("0/0"));
}

TEST_CASE("condition star") {
    CHECK(satisfies_star(2));
    CHECK(satisfies_star(3));
    CHECK_FALSE(satisfies_star(7));
    // brute force over s = 0..g
    for (std::int64_t g = 2; g <= 60; ++g) {
        bool expected = true;
        for (std::int64_t s = 0; s <= g; ++s)
            if (std::gcd(2 * g + 1, s) != 1 && std::gcd(2 * g + 1, s + 1) != 1) expected = false;
        CHECK(satisfies_star(g) == expected);
    }
    CHECK_THROWS_AS(satisfies_star(1), DomainError);
}

TEST_CASE("cusp names") {
    CHECK(parse_cusp("beta") == Cusp::beta);
    CHECK(to_string(Cusp::gamma) == "gamma");
    CHECK_THROWS(parse_cusp("delta"));
}

}
