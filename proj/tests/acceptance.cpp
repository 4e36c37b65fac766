// Acceptance checks. Usage: ffl_acceptance [N ...]; no argument runs all.
// Prints one line per criterion and exits non-zero if any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ffl/atlas.hpp"
#include "ffl/cli.hpp"
#include "ffl/curve_complex.hpp"
#include "ffl/digraph.hpp"
#include "ffl/figures.hpp"
#include "ffl/homology.hpp"
#include "ffl/polynomial.hpp"

using namespace ffl;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void budget(Result& r, double elapsed, double limit) {
    if (elapsed >= limit) r.fail("took " + fmt("%.3f", elapsed) + " s, budget " + fmt("%g", limit) + " s");
}

Result quoted_dilatations() {
    Result r;
    const auto t0 = Clock::now();
    const std::vector<std::pair<FiberedClass, double>> cases = {
        {{2, 6, 1}, 1.7220}, {{1, 2, -3}, 1.7816}, {{3, 5, 0}, 1.4134}};
    std::string vals;
    for (const auto& [a, expected] : cases) {
        const double lambda = largest_real_root(dilatation_polynomial(a));
        vals += a.to_string() + "=" + fmt("%.6f", lambda) + " ";
        if (std::abs(lambda - expected) >= 1e-4) r.fail(a.to_string() + " gave " + fmt("%.6f", lambda));
    }
    const double dt = seconds_since(t0);
    budget(r, dt, 1.0);
    if (r.pass) r.detail = vals + "(" + fmt("%.3f", dt) + " s)";
    return r;
}

Result polynomial_identity() {
    Result r;
    const auto t0 = Clock::now();
    int cases = 0;
    for (std::int64_t i = 0; i <= 6; ++i)
        for (std::int64_t j = 0; j <= 6; ++j)
            for (std::int64_t k = 1; k <= 6; ++k)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const IjkClass c{i, j, k, s};
                    ++cases;
                    if (dilatation_polynomial(to_xyz(c)) != clique_polynomial_formula(c)) r.fail("mismatch at " + c.to_string());
                }
    if (cases != 588) r.fail("expected 588 cases, ran " + std::to_string(cases));
    const double dt = seconds_since(t0);
    budget(r, dt, 1.0);
    if (r.pass) r.detail = std::to_string(cases) + " cases equal (" + fmt("%.3f", dt) + " s)";
    return r;
}

Result mcmullen_cross_check() {
    Result r;
    const auto t0 = Clock::now();
    int graphs = 0;
    double worst = 0;
    for (std::int64_t i = 1; i <= 5; ++i)
        for (std::int64_t j = 1; j <= 5; ++j)
            for (std::int64_t k = 1; k <= 5; ++k)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const IjkClass c{i, j, k, s};
                    const auto g = gamma_for(c);
                    const auto q = clique_polynomial(build_complex(g));
                    ++graphs;
                    if (q != clique_polynomial_formula(c)) r.fail("clique polynomial differs at " + c.to_string());
                    const double lambda = growth_rate_spectral(g);
                    const double mu = smallest_positive_root(q);
                    const double err = std::abs(lambda * mu - 1);
                    worst = std::max(worst, err);
                    if (!(err < 1e-8)) r.fail(c.to_string() + " |lambda*mu - 1| = " + fmt("%.3e", err));
                }
    const double dt = seconds_since(t0);
    budget(r, dt, 30.0);
    if (r.pass)
        r.detail = std::to_string(graphs) + " graphs, max |lambda*mu - 1| = " + fmt("%.2e", worst) + " (" + fmt("%.3f", dt) + " s)";
    return r;
}

IntPolynomial one_plus_t(std::int64_t d) { return IntPolynomial::monomial(1, static_cast<std::size_t>(d)) + IntPolynomial{1}; }

Result factorization_goldens() {
    Result r;
    const auto t0 = Clock::now();
    const IntPolynomial second{1, -1, -1, -1, 1};
    const auto f = dilatation_polynomial({2, 6, 1});
    if (IntPolynomial{1, 0, 0, 1} * second != f) r.fail("(t^3+1)(t^4-t^3-t^2-t+1) != f_(2,6,1)");
    const auto d = divide_exact(f, IntPolynomial{1, 0, 0, 1});
    if (!d || *d.quotient != second) r.fail("f_(2,6,1) / (t^3+1) is not t^4-t^3-t^2-t+1");
    for (std::int64_t g : {2, 4, 8, 10}) {
        const auto q = clique_polynomial_formula({1, g + 2, g - 1, Sign::plus});
        const auto lt = lanneau_thiffeault(g, 1);
        if (one_plus_t(g + 1) * lt != q) r.fail("product identity fails at g=" + std::to_string(g));
        const auto e = divide_exact(q, one_plus_t(g + 1));
        if (!e || *e.quotient != lt) r.fail("exact division fails at g=" + std::to_string(g));
    }
    const double dt = seconds_since(t0);
    budget(r, dt, 1.0);
    if (r.pass) r.detail = "5 factorizations exact (" + fmt("%.3f", dt) + " s)";
    return r;
}

Result topology_goldens() {
    Result r;
    const auto a = fiber_topology({2, 6, 1});
    if (a.surface_name() != "Sigma_{2,5}" || !a.orientable) r.fail("(2,6,1) gave " + a.surface_name());
    const auto b = fiber_topology({3, 5, 0});
    if (b.surface_name() != "Sigma_{0,10}") r.fail("(3,5,0) gave " + b.surface_name());
    for (auto [g, p] : {std::pair<std::int64_t, std::int64_t>{1, 3}, {2, 4}, {3, 5}}) {
        if (std::gcd(2 * g + 1, p + g + 1) != 1) continue;
        const auto cls = to_xyz({p - g, p - g, 2 * g + 1, Sign::plus});
        const auto t = fiber_topology(cls);
        const std::string want = "Sigma_{" + std::to_string(g) + "," + std::to_string(2 * p + 4) + "}";
        if (t.surface_name() != want) r.fail(cls.to_string() + " gave " + t.surface_name() + ", want " + want);
        if (t.boundary_beta != 2 * p + 1) r.fail(cls.to_string() + " beta boundary " + std::to_string(t.boundary_beta));
    }
    if (r.pass) r.detail = "Sigma_{2,5} orientable, Sigma_{0,10}, Sigma_{1,10}, Sigma_{2,12}, Sigma_{3,14}";
    return r;
}

Result perron_frobenius() {
    Result r;
    int matrices = 0;
    double worst = 0;
    for (std::int64_t i = 1; i <= 5; ++i)
        for (std::int64_t j = 1; j <= 5; ++j)
            for (std::int64_t k = 1; k <= 5; ++k)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const IjkClass c{i, j, k, s};
                    const auto a = to_xyz(c);
                    if (!is_primitive(a)) continue;
                    const auto m = incidence_matrix(gamma_for(c));
                    ++matrices;
                    if (!is_perron_frobenius(m)) {
                        r.fail(c.to_string() + " incidence matrix is not PF");
                        continue;
                    }
                    const double err = std::abs(pf_eigenvalue(m) - largest_real_root(dilatation_polynomial(a)));
                    worst = std::max(worst, err);
                    if (!(err < 1e-8)) r.fail(c.to_string() + " PF eigenvalue off by " + fmt("%.3e", err));
                }
    const auto seed = make_matrix({{3, 2}, {1, 1}});
    const double seed_err = std::abs(pf_eigenvalue(seed) - (2 + std::sqrt(3.0)));
    if (!is_perron_frobenius(seed)) r.fail("seed matrix is not PF");
    if (!(seed_err < 1e-10)) r.fail("seed eigenvalue off by " + fmt("%.3e", seed_err));
    if (incidence_matrix(seed_graph()).entries != seed.entries) r.fail("seed graph does not give [[3,2],[1,1]]");
    if (r.pass)
        r.detail = std::to_string(matrices) + " primitive grid matrices PF, max error " + fmt("%.2e", worst) +
                   "; seed error " + fmt("%.2e", seed_err);
    return r;
}

Result asymptotics() {
    Result r;
    const auto t0 = Clock::now();
    const double golden = std::log((3 + std::sqrt(5.0)) / 2);
    double previous = INFINITY;
    double at100 = 0;
    for (std::int64_t g = 2; g <= 100; g += 2) {
        if (!sequence_violation(SequenceName::LT_even_genus, g).empty()) continue;
        const double v = static_cast<double>(g) * std::log(sequence(SequenceName::LT_even_genus, g).dilatation);
        if (!(v < previous)) r.fail("g log lambda not monotone at g=" + std::to_string(g));
        previous = v;
        if (g == 100) at100 = v;
    }
    const double lt_rel = std::abs(at100 - golden) / golden;
    if (!(lt_rel < 0.01)) r.fail("g=100 relative error " + fmt("%.4f", lt_rel));

    const double braid_limit = 2 * std::log(2 + std::sqrt(3.0));
    const double lambda50 = sequence(SequenceName::braid1, 50).dilatation;
    const double odd_plus = 101 * std::log(lambda50);
    const double odd_minus = 99 * std::log(lambda50);
    const double rel_plus = std::abs(odd_plus - braid_limit) / braid_limit;
    const double rel_minus = std::abs(odd_minus - braid_limit) / braid_limit;
    if (!(rel_plus < 0.02))
        r.fail("(2n+1) log lambda at n=50 is " + fmt("%.5f", odd_plus) + ", relative error " + fmt("%.4f", rel_plus) +
               " vs limit " + fmt("%.5f", braid_limit) + "; with 2n-1 it is " + fmt("%.5f", odd_minus) +
               " (relative error " + fmt("%.2e", rel_minus) + ")");
    const double dt = seconds_since(t0);
    budget(r, dt, 10.0);
    if (r.pass)
        r.detail = "g=100 error " + fmt("%.4f", lt_rel) + ", braid n=50 error " + fmt("%.4f", rel_plus) + " (" +
                   fmt("%.3f", dt) + " s)";
    return r;
}

Result properties() {
    Result r;
    for (std::int64_t i = 0; i <= 6; ++i)
        for (std::int64_t j = 0; j <= 6; ++j)
            for (std::int64_t k = 1; k <= 6; ++k)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    const IjkClass c{i, j, k, s};
                    if (from_xyz(to_xyz(c)) != c) r.fail("round trip fails at " + c.to_string());
                    if (!is_reciprocal(clique_polynomial_formula(c))) r.fail("Q not reciprocal at " + c.to_string());
                }
    for (std::int64_t x = 1; x <= 10; ++x)
        for (std::int64_t y = 1; y <= 10; ++y)
            for (std::int64_t z = -10; z < std::min(x, y); ++z) {
                const FiberedClass a{x, y, z};
                if (dilatation_polynomial(swap_symmetry(a)) != dilatation_polynomial(a))
                    r.fail("swap changes f at " + a.to_string());
                if (!is_primitive(a)) continue;
                const auto t = fiber_topology(a);
                if (2 - 2 * t.genus - t.boundary_total() != -norm(a)) r.fail("Euler characteristic at " + a.to_string());
            }
    std::ostringstream first, second, err;
    const int s1 = cli::run({"scan", "--norm-max", "24", "--format", "csv"}, first, err);
    const int s2 = cli::run({"scan", "--norm-max", "24", "--format", "csv"}, second, err);
    if (s1 != 0 || s2 != 0) r.fail("scan failed: " + err.str());
    if (first.str() != second.str()) r.fail("scan reruns differ");
    if (r.pass) r.detail = "round trips, swap invariance, reciprocity, Euler characteristic, scan reruns identical";
    return r;
}

const std::vector<std::pair<std::string, std::function<Result()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Result()>>> list = {
        {"quoted dilatations", quoted_dilatations},
        {"polynomial identity f = Q", polynomial_identity},
        {"McMullen cross-check", mcmullen_cross_check},
        {"factorization goldens", factorization_goldens},
        {"fiber topology goldens", topology_goldens},
        {"Perron-Frobenius", perron_frobenius},
        {"asymptotics", asymptotics},
        {"property suites", properties},
    };
    return list;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int a = 1; a < argc; ++a) {
        const int n = std::atoi(argv[a]);
        if (n < 1 || n > static_cast<int>(criteria().size())) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[a]);
            return 64;
        }
        which.push_back(n);
    }
    if (which.empty())
        for (int n = 1; n <= static_cast<int>(criteria().size()); ++n) which.push_back(n);

    bool all = true;
    for (int n : which) {
        const auto& [name, check] = criteria()[static_cast<std::size_t>(n - 1)];
        Result r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s: %s\n", n, r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
