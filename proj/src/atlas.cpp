#include "ffl/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace ffl {

namespace {

struct SequenceInfo {
    SequenceName name;
    const char* text;
};

constexpr SequenceInfo sequence_names[] = {
    {SequenceName::LT_even_genus, "LT_even_genus"}, {SequenceName::ori79, "ori79"},
    {SequenceName::ori15, "ori15"},                 {SequenceName::whitehead, "whitehead"},
    {SequenceName::braid1, "braid1"},               {SequenceName::braid2, "braid2"},
    {SequenceName::tsai, "tsai"},
};

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

IjkClass sequence_class(SequenceName name, std::int64_t n, std::int64_t p) {
    switch (name) {
    case SequenceName::LT_even_genus: return {1, n + 2, n - 1, Sign::plus};
    case SequenceName::ori79: return {n + 6, 2, n, Sign::plus};
    case SequenceName::ori15: return {n + 10, 4, n - 2, Sign::plus};
    case SequenceName::whitehead: return {2 * n - 1, 1, n - 1, Sign::minus};
    case SequenceName::braid1: return {0, 1, n - 1, Sign::plus};
    case SequenceName::braid2: return {0, 2, 2 * n - 1, Sign::plus};
    case SequenceName::tsai: return {p - n, p - n, 2 * n + 1, Sign::plus};
    }
    throw Error("unreachable sequence");
}

std::string parameter_text(SequenceName name, std::int64_t n, std::optional<std::int64_t> p) {
    switch (name) {
    case SequenceName::LT_even_genus:
    case SequenceName::ori79:
    case SequenceName::ori15: return "g=" + std::to_string(n);
    case SequenceName::whitehead:
    case SequenceName::braid1:
    case SequenceName::braid2: return "n=" + std::to_string(n);
    case SequenceName::tsai: return "(g,p)=(" + std::to_string(n) + "," + std::to_string(p.value_or(0)) + ")";
    }
    return "?";
}

SequenceEntry make_entry(const FiberedClass& a, Tolerance tol) {
    SequenceEntry e;
    e.cls = a;
    e.topology = fiber_topology(a);
    e.coordinates = a.y >= a.x ? from_xyz(a) : from_xyz(swap_symmetry(a));
    e.polynomial = dilatation_polynomial(a);
    e.dilatation = largest_real_root(e.polynomial, tol);
    e.normalized_entropy = static_cast<double>(norm(a)) * std::log(e.dilatation);
    e.has_mirror = a.x != a.y;
    return e;
}

unsigned thread_count() {
    if (const char* env = std::getenv("FFL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

std::string Section::to_string() const {
    std::string c = ffl::to_string(cusp);
    return "S_" + c + "(" + slope.to_string() + ")";
}

bool in_section(const Section& s, const FiberedClass& a) {
    const wide_int p = s.slope.p(), q = s.slope.q();
    switch (s.cusp) {
    case Cusp::alpha: return -p * a.x == q * (a.y + a.z);
    case Cusp::beta: return -p * a.y == q * (a.z + a.x);
    case Cusp::gamma: return -p * a.z == q * (a.x + a.y);
    }
    return false;
}

bool is_hyperbolic_filling(const Slope& r) {
    if (r.is_infinite()) return false;
    const Rational& v = r.value();
    return !(v.den() == 1 && v.num() >= -3 && v.num() <= 0);
}

std::string to_string(SequenceName n) {
    for (const auto& s : sequence_names)
        if (s.name == n) return s.text;
    return "?";
}

SequenceName parse_sequence_name(const std::string& text) {
    for (const auto& s : sequence_names)
        if (text == s.text) return s.name;
    std::string known;
    for (const auto& s : sequence_names) known += std::string(known.empty() ? "" : ", ") + s.text;
    throw DomainError("unknown sequence '" + text + "' (expected one of " + known + ")");
}

const std::vector<SequenceName>& all_sequences() {
    static const std::vector<SequenceName> all = [] {
        std::vector<SequenceName> v;
        for (const auto& s : sequence_names) v.push_back(s.name);
        return v;
    }();
    return all;
}

std::string sequence_violation(SequenceName name, std::int64_t n, std::optional<std::int64_t> p) {
    switch (name) {
    case SequenceName::LT_even_genus:
        if (n < 2 || (mod(n, 6) != 2 && mod(n, 6) != 4)) return "LT_even_genus needs g >= 2 with g = 2 or 4 mod 6";
        break;
    case SequenceName::ori79:
        if (n < 7 || (mod(n, 10) != 7 && mod(n, 10) != 9)) return "ori79 needs g = 7 or 9 mod 10";
        break;
    case SequenceName::ori15:
        if (n < 3 || (mod(n, 10) != 1 && mod(n, 10) != 5)) return "ori15 needs g >= 3 with g = 1 or 5 mod 10";
        break;
    case SequenceName::whitehead:
        if (n < 2) return "whitehead needs n >= 2";
        break;
    case SequenceName::braid1:
        if (n < 3) return "braid1 needs n >= 3";
        break;
    case SequenceName::braid2:
        if (n < 2) return "braid2 needs n >= 2";
        break;
    case SequenceName::tsai:
        if (!p) return "tsai needs both g and p";
        if (n < 0 || *p < n) return "tsai needs p >= g >= 0";
        if (std::gcd(2 * n + 1, *p + n + 1) != 1) return "tsai needs gcd(2g+1, p+g+1) = 1";
        break;
    }
    return {};
}

SequenceEntry sequence(SequenceName name, std::int64_t param, std::optional<std::int64_t> p, Tolerance tol) {
    const std::string bad = sequence_violation(name, param, p);
    if (!bad.empty()) throw DomainError(bad + ", got " + parameter_text(name, param, p));
    const IjkClass c = sequence_class(name, param, p.value_or(0));
    SequenceEntry e = make_entry(to_xyz(c), tol);
    e.coordinates = c;
    e.parameter = parameter_text(name, param, p);
    e.index = name == SequenceName::tsai ? *p : param;
    return e;
}

std::int64_t tsai_parameter(std::int64_t g, std::int64_t i) {
    if (g < 0 || i < 0) throw DomainError("tsai_parameter needs g, i >= 0");
    return (g + 1) + i * (2 * g + 1);
}

AsymptoticLimit asymptotic_limit(SequenceName name) {
    switch (name) {
    case SequenceName::LT_even_genus:
    case SequenceName::ori79:
    case SequenceName::ori15: return {std::log((3 + std::sqrt(5.0)) / 2), "log((3+sqrt5)/2)", "g"};
    case SequenceName::braid1: return {2 * std::log(2 + std::sqrt(3.0)), "2 log(2+sqrt3)", "2n-1"};
    case SequenceName::braid2: return {2 * std::log(2 + std::sqrt(3.0)), "2 log(2+sqrt3)", "4n+2"};
    case SequenceName::whitehead: {
        const double d4 = largest_real_root(IntPolynomial{1, -2, 0, -2, 1});
        return {2 * std::log(d4), "2 log delta(D_4)", "2n-1"};
    }
    case SequenceName::tsai: break;
    }
    throw DomainError("tsai has no normalized-entropy limit");
}

std::int64_t asymptotic_normalizer(SequenceName name, std::int64_t n) {
    switch (name) {
    case SequenceName::LT_even_genus:
    case SequenceName::ori79:
    case SequenceName::ori15: return n;
    case SequenceName::whitehead:
    case SequenceName::braid1: return 2 * n - 1;
    case SequenceName::braid2: return 4 * n + 2;
    case SequenceName::tsai: break;
    }
    throw DomainError("tsai has no normalized-entropy limit");
}

std::vector<AsymptoticRow> asymptotic_report(SequenceName name, const std::vector<std::int64_t>& params, Tolerance tol) {
    const AsymptoticLimit lim = asymptotic_limit(name);
    std::vector<AsymptoticRow> rows;
    for (auto n : params) {
        if (!sequence_violation(name, n).empty()) continue;
        const SequenceEntry e = sequence(name, n, std::nullopt, tol);
        AsymptoticRow r;
        r.parameter = e.parameter;
        r.index = n;
        r.dilatation = e.dilatation;
        r.normalizer = asymptotic_normalizer(name, n);
        r.value = static_cast<double>(r.normalizer) * std::log(e.dilatation);
        r.limit = lim.value;
        r.relative_error = std::abs(r.value - lim.value) / lim.value;
        rows.push_back(r);
    }
    return rows;
}

std::vector<CatalogueEntry> minimizer_catalogue(Tolerance tol) {
    std::vector<CatalogueEntry> out;
    auto add = [&](std::string name, IntPolynomial p, std::string realized, std::string status) {
        const double v = largest_real_root(p, tol);
        out.push_back({std::move(name), std::move(p), v, std::move(realized), std::move(status)});
    };
    auto second_factor = [](const IjkClass& c, std::int64_t d) {
        const auto q = divide_exact(clique_polynomial_formula(c), IntPolynomial::monomial(1, d) + IntPolynomial{1});
        if (!q) throw Error("catalogued factorization failed for " + c.to_string());
        return *q.quotient;
    };

    add("delta_2 = delta_2^+", lanneau_thiffeault(2, 1), "(1,4,1)+", "proven");
    add("delta_4^+", lanneau_thiffeault(4, 1), "(1,6,3)+", "proven");
    add("delta_8^+", lanneau_thiffeault(8, 1), "(1,10,7)+", "proven");
    add("delta_5^+", second_factor({15, 4, 3, Sign::plus}, 11), "(15,4,3)+", "proven");
    add("delta_7^+", second_factor({13, 2, 7, Sign::plus}, 11), "(13,2,7)+", "proven");
    add("delta(D_4)", IntPolynomial{1, -2, 0, -2, 1}, "", "proven");
    add("delta(D_5)", lanneau_thiffeault(2, 1), "(1,2)0", "proven");
    add("delta(D_7)", clique_polynomial_formula({0, 1, 3, Sign::plus}), "(1,3)0", "proven");
    add("delta(D_8)", clique_polynomial_formula({0, 2, 3, Sign::plus}), "(2,3)0", "proven");
    for (std::int64_t g : {6, 10, 14, 16})
        add("delta_" + std::to_string(g) + "^+ ?= lambda_(" + std::to_string(g) + ",1)", lanneau_thiffeault(g, 1), "",
            "conjectural");
    return out;
}

SequenceEntry describe_class(const FiberedClass& a, Tolerance tol) {
    SequenceEntry e = make_entry(a, tol);
    e.parameter = a.to_string();
    return e;
}

std::vector<SequenceEntry> scan(std::int64_t norm_max, const ScanFilter& filter, Tolerance tol, std::int64_t cap) {
    if (norm_max < 1) throw DomainError("norm_max must be positive");
    if (norm_max > cap)
        throw DomainError("norm_max " + std::to_string(norm_max) + " exceeds the scan cap " + std::to_string(cap));

    std::vector<FiberedClass> candidates;
    for (std::int64_t x = 1; x < norm_max; ++x)
        for (std::int64_t y = x; y < norm_max; ++y)
            for (std::int64_t z = x + y - norm_max; z < x; ++z) {
                const FiberedClass a{x, y, z};
                if (!is_primitive(a)) continue;
                if (filter.section && !in_section(*filter.section, a)) continue;
                if (filter.orientable || filter.genus) {
                    const FiberTopology t = fiber_topology(a);
                    if (filter.orientable && t.orientable != *filter.orientable) continue;
                    if (filter.genus && t.genus != *filter.genus) continue;
                }
                candidates.push_back(a);
            }

    std::vector<SequenceEntry> entries(candidates.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t n; (n = next.fetch_add(1)) < candidates.size();)
                entries[n] = describe_class(candidates[n], tol);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = candidates.size();
        }
    };
    const unsigned threads = std::min<std::size_t>(thread_count(), std::max<std::size_t>(1, candidates.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::stable_sort(entries.begin(), entries.end(), [](const SequenceEntry& a, const SequenceEntry& b) {
        if (a.normalized_entropy != b.normalized_entropy) return a.normalized_entropy < b.normalized_entropy;
        return a.cls < b.cls;
    });
    return entries;
}

std::string FillReport::surface_name() const {
    return "Sigma_{" + std::to_string(genus) + "," + std::to_string(remaining_boundaries) + "}";
}

FillReport fill_and_pull_back(const Section& s, const FiberedClass& a, Tolerance tol) {
    require_fibered(a);
    if (!is_hyperbolic_filling(s.slope))
        throw DomainError("slope " + s.slope.to_string() + " is exceptional (inf, -3, -2, -1, 0); " + s.to_string() +
                          " is not hyperbolic");
    if (!in_section(s, a)) throw DomainError("class " + a.to_string() + " is not in " + s.to_string());

    FillReport r;
    r.section = s;
    r.cls = a;
    r.before = fiber_topology(a);
    r.genus = r.before.genus;
    r.capped_boundaries = r.before.boundary(s.cusp);
    r.remaining_boundaries = r.before.boundary_total() - r.capped_boundaries;
    r.filled_prongs = r.before.prongs(s.cusp);
    r.extends_pseudo_anosov = r.filled_prongs != 1;
    r.polynomial = dilatation_polynomial(a);
    r.dilatation = largest_real_root(r.polynomial, tol);
    return r;
}

} // namespace ffl
