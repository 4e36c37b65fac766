#include <doctest.h>

#include "ffl/errors.hpp"
#include "ffl/figures.hpp"

using namespace ffl;

namespace {

std::string dot_of(const ChainSystem& s) { return to_dot(compact_graph(s)); }

} // namespace

TEST_SUITE("figures") {

TEST_CASE("family names round trip") {
    CHECK(all_families().size() == 8);
    for (Family f : all_families()) CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("plus"), DomainError);
}

TEST_CASE("family routing") {
    CHECK(family_for({1, 4, 1, Sign::plus}) == Family::plus_nondeg);
    CHECK(family_for({3, 0, 1, Sign::plus}) == Family::plus_j0);
    CHECK(family_for({0, 2, 3, Sign::minus}) == Family::zero_j0);
    CHECK(family_for({0, 0, 2, Sign::plus}) == Family::zero_0k);
    CHECK(family_for({3, 1, 4, Sign::minus}) == Family::minus_small_i);
    CHECK(family_for({5, 1, 2, Sign::minus}) == Family::minus_large_i);
    CHECK(family_for({1, 0, 3, Sign::minus}) == Family::minus_j0_small);
    CHECK(family_for({3, 0, 3, Sign::minus}) == Family::minus_j0_large);
    CHECK_THROWS_AS(family_for({1, 1, 0, Sign::plus}), DomainError);
}

TEST_CASE("window index") {
    CHECK(window_index(5, 2) == 2);
    CHECK(window_index(3, 4) == 0);
    CHECK(window_index(4, 4) == 1);
    for (std::int64_t i = 0; i <= 30; ++i)
        for (std::int64_t k = 1; k <= 7; ++k) {
            const auto l = window_index(i, k);
            CHECK(i - k * l >= 0);
            CHECK(i - k * l <= k - 1);
        }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gamma_plus(0, 1, 1), DomainError);
    CHECK_THROWS_AS(gamma_from_figure(Family::minus_small_i, 5, 1, 2), DomainError);
    CHECK_THROWS_AS(gamma_from_figure(Family::minus_large_i, 1, 1, 2), DomainError);
    CHECK_THROWS_AS(gamma_from_figure(Family::plus_j0, 1, 1, 2), DomainError);
    CHECK_THROWS_AS(gamma_from_figure(Family::zero_0k, 0, 0, 0), DomainError);
    CHECK_NOTHROW(gamma_from_figure(Family::minus_small_i, 3, 1, 4));
}

TEST_CASE("plus_nondeg is gamma_plus") {
    CHECK(to_dot(gamma_from_figure(Family::plus_nondeg, 2, 3, 4)) == to_dot(gamma_plus(2, 3, 4)));
}

TEST_CASE("degenerate tables equal eliminated general systems") {
    for (std::int64_t k = 1; k <= 5; ++k) {
        CHECK(dot_of(figure_system(Family::zero_0k, 0, 0, k)) == dot_of(eliminate_empty_chains(plus_system(0, 0, k))));
        for (std::int64_t n = 1; n <= 6; ++n) {
            CHECK(dot_of(figure_system(Family::plus_j0, n, 0, k)) ==
                  dot_of(eliminate_empty_chains(plus_system(n, 0, k))));
            CHECK(dot_of(figure_system(Family::zero_j0, 0, n, k)) ==
                  dot_of(eliminate_empty_chains(plus_system(0, n, k))));
            const Family mj = n < k ? Family::minus_j0_small : Family::minus_j0_large;
            CHECK(dot_of(figure_system(mj, n, 0, k)) == dot_of(eliminate_empty_chains(minus_system(n, 0, k))));
        }
    }
}

TEST_CASE("elimination rules") {
    ChainSystem bad;
    bad.chains = {{'a', 2}, {'b', 0}};
    bad.links = {{'a', 'b', 2}, {'b', 'a'}};
    CHECK_THROWS_AS(eliminate_empty_chains(bad), GraphError);

    ChainSystem self;
    self.chains = {{'a', 2}, {'b', 0}};
    self.links = {{'a', 'b'}, {'b', 'b'}};
    CHECK_THROWS_AS(eliminate_empty_chains(self), GraphError);

    ChainSystem ok;
    ok.chains = {{'a', 2}, {'b', 0}};
    ok.links = {{'a', 'b'}, {'b', 'a'}, {'b', 'a', 2}};
    const auto g = compact_graph(eliminate_empty_chains(ok));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);

    CHECK_THROWS_AS(compact_graph(ok), GraphError);
}

TEST_CASE("compact graph shape") {
    // unit vertices of Gamma = i + j + 2k
    for (std::int64_t i = 1; i <= 4; ++i)
        for (std::int64_t j = 1; j <= 4; ++j)
            for (std::int64_t k = 1; k <= 4; ++k) {
                const auto g = gamma_plus(i, j, k);
                CHECK(static_cast<std::int64_t>(g.vertex_count()) + g.subdivision_count() == i + j + 2 * k);
                const auto m = gamma_from_figure(k > i ? Family::minus_small_i : Family::minus_large_i, i, j, k);
                CHECK(static_cast<std::int64_t>(m.vertex_count()) + m.subdivision_count() == i + j + 2 * k);
            }
    const auto g = gamma_plus(1, 4, 1);
    CHECK(g.vertex_count() == 5);
    CHECK(g.find("r_1"));
    CHECK(g.find("r_4"));
}

TEST_CASE("seed graph") {
    const auto g = seed_graph();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 7);
    CHECK(is_strongly_connected(g));
}

TEST_CASE("figure graphs are strongly connected") {
    for (std::int64_t i = 0; i <= 5; ++i)
        for (std::int64_t j = 0; j <= 5; ++j)
            for (std::int64_t k = 1; k <= 5; ++k)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const IjkClass c{i, j, k, s};
                    if (!is_primitive(to_xyz(c))) continue;
                    CHECK_MESSAGE(is_strongly_connected(gamma_for(c)), c.to_string());
                }
}

}
