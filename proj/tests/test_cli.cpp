#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ffl/cli.hpp"
#include "ffl/errors.hpp"
#include "ffl/reports.hpp"

using namespace ffl;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_class grammar") {
    CHECK(std::get<IjkClass>(parse_class("1,4,1:+")) == IjkClass{1, 4, 1, Sign::plus});
    CHECK(std::get<IjkClass>(parse_class("3, 1, 1 :-")) == IjkClass{3, 1, 1, Sign::minus});
    CHECK(std::get<IjkClass>(parse_class("2,3:0")) == IjkClass{0, 2, 3, Sign::plus});
    CHECK(std::get<FiberedClass>(parse_class("3,5,0")) == FiberedClass{3, 5, 0});
    CHECK(std::get<FiberedClass>(parse_class(" 1 , 2 , -3 ")) == FiberedClass{1, 2, -3});
    CHECK_THROWS_AS(parse_class("0,0,0"), DomainError);
    CHECK_THROWS_AS(parse_class("1,-4,1:+"), ParseError);
    CHECK_THROWS_AS(parse_class("1,4"), ParseError);
    CHECK_THROWS_AS(parse_class("1,4,1:*"), ParseError);
    try {
        parse_class("2,x,1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.token() == "x");
        CHECK(e.offset() == 2);
    }
    CHECK(parse_fibered("1,4,1:+") == FiberedClass{2, 6, 1});
    CHECK(parse_ijk("6,2,1") == IjkClass{1, 4, 1, Sign::plus});
}

TEST_CASE("other parsers") {
    CHECK(parse_range("5") == std::vector<std::int64_t>{5});
    CHECK(parse_range("2..5") == std::vector<std::int64_t>{2, 3, 4, 5});
    CHECK_THROWS_AS(parse_range("5..2"), ParseError);
    CHECK_THROWS_AS(parse_range("a"), ParseError);
    const auto s = parse_section("beta:-1/2");
    CHECK(s.cusp == Cusp::beta);
    CHECK(s.slope == Slope::finite(Rational(-1, 2)));
    CHECK(parse_section("gamma:inf").slope.is_infinite());
    CHECK_THROWS(parse_section("beta"));
}

TEST_CASE("format_real follows tolerance") {
    CHECK(format_real(1.7220838057, Tolerance(1e-12)) == "1.722083805700");
    CHECK(format_real(1.7220838057, Tolerance(1e-3)) == "1.722084");
}

TEST_CASE("info text") {
    const auto r = run({"info", "2,6,1"});
    CHECK(r.status == cli::exit_ok);
    CHECK(r.out.find("norm         7") != std::string::npos);
    CHECK(r.out.find("Sigma_{2,5}") != std::string::npos);
    CHECK(r.out.find("orientable   yes") != std::string::npos);
    CHECK(r.out.find("1.72208") != std::string::npos);
    CHECK(r.out.find("t^7 - t^6 - t^5 - t^2 - t + 1") != std::string::npos);
    CHECK(r.out.find("tolerance    1e-12") != std::string::npos);
}

TEST_CASE("info json round trip") {
    for (const char* cls : {"2,6,1", "3,1,1:-", "2,3:0", "5,7,2"}) {
        const auto first = run({"info", cls, "--format", "json"});
        REQUIRE(first.status == 0);
        const auto j = Json::parse(first.out);
        CHECK(j["schema"] == "ffl/1");
        const auto& c = j["report"]["class"];
        const std::string again_cls = std::to_string(c["x"].get<std::int64_t>()) + "," +
                                      std::to_string(c["y"].get<std::int64_t>()) + "," +
                                      std::to_string(c["z"].get<std::int64_t>());
        const auto second = run({"info", again_cls, "--format", "json"});
        CHECK(second.out == first.out);
        CHECK(Json::parse(second.out) == j);
    }
}

TEST_CASE("poly divide") {
    const auto r = run({"poly", "2,6,1", "--divide", "t^3+1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("t^4 - t^3 - t^2 - t + 1") != std::string::npos);
    const auto bad = run({"poly", "2,6,1", "--divide", "t^2+1"});
    CHECK(bad.status == cli::exit_domain);
    CHECK(bad.out.empty());
}

TEST_CASE("graph and complex") {
    const auto dot = run({"graph", "1,4,1:+", "--format", "dot"});
    CHECK(dot.status == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    const auto fam = run({"complex", "--family", "minus_large_i", "--params", "5,1,2", "--format", "json"});
    CHECK(fam.status == 0);
    CHECK(Json::parse(fam.out)["schema"] == "ffl/1");
    CHECK(run({"complex", "--family", "minus_large_i", "--params", "1,1,2"}).status == cli::exit_domain);
}

TEST_CASE("verify grid") {
    const auto r = run({"verify", "--grid", "4", "--tolerance", "1e-8"});
    CHECK(r.status == 0);
    CHECK(r.out.find("128") != std::string::npos);
    const auto j = run({"verify", "--grid", "2", "--format", "json"});
    CHECK(j.status == 0);
    CHECK(Json::parse(j.out)["checks"].size() == 16);
}

TEST_CASE("sequence csv") {
    const auto r = run({"sequence", "LT_even_genus", "--g", "2..50", "--format", "csv"});
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == csv_header() + ",normalized");
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    // g = 2, 4, 8, 10, ..., 50
    CHECK(rows == 17);
    CHECK(run({"sequence", "LT_even_genus", "--g", "6"}).status == cli::exit_domain);
}

TEST_CASE("scan output is byte identical") {
    const auto a = run({"scan", "--norm-max", "16", "--format", "csv"});
    const auto b = run({"scan", "--norm-max", "16", "--format", "csv"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind(csv_header(), 0) == 0);
}

TEST_CASE("fill and catalogue") {
    const auto f = run({"fill", "2,3,-5", "--section", "gamma:1"});
    CHECK(f.status == 0);
    CHECK(f.out.find("Sigma_{1,5}") != std::string::npos);
    const auto c = run({"catalogue", "--format", "json"});
    CHECK(c.status == 0);
    CHECK(Json::parse(c.out)["schema"] == "ffl/1");
}

TEST_CASE("out file") {
    const auto path = std::filesystem::temp_directory_path() / "ffl_cli_out_test.txt";
    std::filesystem::remove(path);
    const auto r = run({"info", "2,6,1", "--out", path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == run({"info", "2,6,1"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("error paths write nothing to the data sink") {
    const std::vector<std::pair<std::vector<std::string>, int>> cases = {
        {{}, cli::exit_usage},
        {{"frobnicate"}, cli::exit_usage},
        {{"info"}, cli::exit_usage},
        {{"info", "0,0,0"}, cli::exit_domain},
        {{"info", "1,1,1"}, cli::exit_domain},
        {{"info", "4,6,2"}, cli::exit_domain},
        {{"info", "2,x,1"}, cli::exit_usage},
        {{"info", "2,6,1", "--format", "yaml"}, cli::exit_usage},
        {{"info", "2,6,1", "--format", "dot"}, cli::exit_usage},
        {{"info", "2,6,1", "--tolerance", "-1"}, cli::exit_usage},
        {{"graph", "--family", "nope", "--params", "1,1,1"}, cli::exit_domain},
        {{"sequence", "ori79", "--g", "8"}, cli::exit_domain},
        {{"sequence", "tsai", "--g", "1"}, cli::exit_usage},
        {{"sequence", "tsai", "--g", "1", "--p", "4"}, cli::exit_domain},
        {{"scan", "--norm-max", "500"}, cli::exit_domain},
        {{"fill", "2,6,1", "--section", "beta:-1"}, cli::exit_domain},
        {{"fill", "3,5,0", "--section", "gamma:inf"}, cli::exit_domain},
        {{"fill", "2,6,1", "--section", "beta:-1/3"}, cli::exit_domain},
        {{"verify", "--grid", "99"}, cli::exit_domain},
    };
    for (const auto& [args, expected] : cases) {
        const auto r = run(args);
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        CHECK_MESSAGE(r.status == expected, joined);
        CHECK_MESSAGE(r.out.empty(), joined);
        CHECK_MESSAGE(!r.err.empty(), joined);
    }
}

TEST_CASE("help") {
    const auto r = run({"--help"});
    CHECK(r.status == 0);
}

}
