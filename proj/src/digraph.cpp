#include "ffl/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <tuple>

namespace ffl {

std::size_t MetricDigraph::add_vertex(const std::string& label) {
    if (label.empty()) throw GraphError("empty vertex label");
    if (index_.count(label)) throw GraphError("duplicate vertex label '" + label + "'");
    index_.emplace(label, labels_.size());
    labels_.push_back(label);
    out_.emplace_back();
    return labels_.size() - 1;
}

std::size_t MetricDigraph::ensure_vertex(const std::string& label) {
    if (auto v = find(label)) return *v;
    return add_vertex(label);
}

void MetricDigraph::add_edge(std::size_t source, std::size_t target, std::int64_t length) {
    if (source >= labels_.size() || target >= labels_.size()) throw GraphError("edge endpoint out of range");
    if (length < 1) throw GraphError("edge length must be >= 1, got " + std::to_string(length));
    out_[source].push_back(edges_.size());
    edges_.push_back({source, target, length});
}

void MetricDigraph::add_edge(const std::string& source, const std::string& target, std::int64_t length) {
    add_edge(vertex(source), vertex(target), length);
}

std::optional<std::size_t> MetricDigraph::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t MetricDigraph::vertex(const std::string& label) const {
    auto v = find(label);
    if (!v) throw GraphError("no vertex labelled '" + label + "'");
    return *v;
}

bool MetricDigraph::is_unit() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.length == 1; });
}

std::int64_t MetricDigraph::subdivision_count() const noexcept {
    std::int64_t n = 0;
    for (const auto& e : edges_) n += e.length - 1;
    return n;
}

namespace {

// "p_12" -> ("p", 12)
std::optional<std::pair<std::string, std::int64_t>> split_chain_label(const std::string& label) {
    const auto us = label.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == label.size()) return std::nullopt;
    std::int64_t n = 0;
    for (std::size_t i = us + 1; i < label.size(); ++i) {
        if (label[i] < '0' || label[i] > '9') return std::nullopt;
        n = n * 10 + (label[i] - '0');
    }
    return std::make_pair(label.substr(0, us), n);
}

std::vector<std::vector<std::size_t>> adjacency_lists(const MetricDigraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (const auto& e : g.edges()) adj[e.source].push_back(e.target);
    return adj;
}

std::vector<std::size_t> tarjan(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call; // (vertex, next child position)
    std::size_t counter = 0, components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (pos < adj[v].size()) {
                const std::size_t w = adj[v][pos++];
                if (index[w] == unvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return comp;
}

bool single_component(const std::vector<std::vector<std::size_t>>& adj) {
    if (adj.empty()) return false;
    const auto comp = tarjan(adj);
    return std::all_of(comp.begin(), comp.end(), [&](std::size_t c) { return c == comp.front(); });
}

struct Entry {
    std::size_t to;
    std::size_t from;
    double count;
};

// Power iteration on B = A + I (primitive whenever A is irreducible, even if A
// is periodic). For positive x the Collatz-Wielandt ratios (Bx)_i / x_i bound
// rho(B) from both sides; stop once the bracket is below the tolerance.
double perron_root(std::size_t n, const std::vector<Entry>& entries, Tolerance tol) {
    constexpr long max_iterations = 1000000;
    std::vector<double> x(n, 1.0), y(n);
    for (long it = 0; it < max_iterations; ++it) {
        y = x;
        for (const auto& e : entries) y[e.to] += e.count * x[e.from];
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, top = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            top = std::max(top, y[i]);
        }
        // rounding in the ratios is a few ulps of hi
        const double floor_tol = 64 * std::numeric_limits<double>::epsilon() * hi;
        if (hi - lo < std::max(tol.value(), floor_tol)) return (lo + hi) / 2 - 1.0;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
    }
    throw GraphError("power iteration did not converge within 10^6 iterations");
}

double log_big(const BigInt& v) {
    const std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 900) return std::log(v.convert_to<double>());
    const std::size_t shift = bits - 64;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace

MetricDigraph unit_expand(const MetricDigraph& g) {
    MetricDigraph out;
    for (const auto& l : g.labels()) out.add_vertex(l);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        if (e.length == 1) {
            out.add_edge(e.source, e.target, 1);
            continue;
        }
        const auto a = split_chain_label(g.label(e.source));
        const auto b = split_chain_label(g.label(e.target));
        bool chain = a && b && a->first == b->first && b->second - a->second == e.length;
        if (chain) {
            for (std::int64_t m = 1; m < e.length; ++m)
                if (g.find(a->first + "_" + std::to_string(a->second + m))) chain = false;
        }
        std::size_t prev = e.source;
        for (std::int64_t m = 1; m < e.length; ++m) {
            const std::string label = chain ? a->first + "_" + std::to_string(a->second + m)
                                            : g.label(e.source) + ">" + g.label(e.target) + "#" +
                                                  std::to_string(ei) + "." + std::to_string(m);
            const std::size_t v = out.add_vertex(label);
            out.add_edge(prev, v, 1);
            prev = v;
        }
        out.add_edge(prev, e.target, 1);
    }
    return out;
}

std::vector<std::size_t> strong_components(const MetricDigraph& g) { return tarjan(adjacency_lists(g)); }

bool is_strongly_connected(const MetricDigraph& g) { return single_component(adjacency_lists(g)); }

double growth_rate_spectral(const MetricDigraph& g, Tolerance tol) {
    if (g.vertex_count() == 0) throw GraphError("growth rate of the empty graph");
    if (!is_strongly_connected(g)) throw GraphError("graph is not strongly connected");
    const MetricDigraph u = unit_expand(g);
    std::vector<Entry> entries;
    entries.reserve(u.edge_count());
    for (const auto& e : u.edges()) entries.push_back({e.target, e.source, 1.0});
    return perron_root(u.vertex_count(), entries, tol);
}

BigInt closed_path_count(const MetricDigraph& g, int horizon) {
    if (horizon < 1) throw DomainError("path-count horizon must be >= 1");
    const MetricDigraph u = unit_expand(g);
    const std::size_t n = u.vertex_count();
    // rows of A^t, advanced by right multiplication with A edge by edge
    std::vector<std::vector<BigInt>> power(n, std::vector<BigInt>(n));
    for (const auto& e : u.edges()) power[e.source][e.target] += 1;
    BigInt total = 0;
    for (int t = 1;; ++t) {
        for (std::size_t i = 0; i < n; ++i) total += power[i][i];
        if (t == horizon) break;
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& e : u.edges())
                if (power[i][e.source] != 0) next[i][e.target] += power[i][e.source];
        power = std::move(next);
    }
    return total;
}

double growth_rate_path_count(const MetricDigraph& g, int horizon) {
    const BigInt n0 = closed_path_count(g, horizon);
    if (n0 == 0) return 0.0;
    return std::exp(log_big(n0) / horizon);
}

IncidenceMatrix incidence_matrix(const MetricDigraph& g) {
    const MetricDigraph u = unit_expand(g);
    IncidenceMatrix m;
    m.labels = u.labels();
    m.entries.assign(u.vertex_count(), std::vector<std::int64_t>(u.vertex_count(), 0));
    for (const auto& e : u.edges()) ++m.entries[e.target][e.source];
    return m;
}

IncidenceMatrix make_matrix(std::vector<std::vector<std::int64_t>> entries) {
    IncidenceMatrix m;
    for (const auto& row : entries) {
        if (row.size() != entries.size()) throw DomainError("incidence matrix must be square");
        for (auto v : row)
            if (v < 0) throw DomainError("incidence matrix entries must be non-negative");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) m.labels.push_back("e_" + std::to_string(i + 1));
    m.entries = std::move(entries);
    return m;
}

bool is_perron_frobenius(const IncidenceMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return false;
    const std::size_t words = (n + 63) / 64;
    using Row = std::vector<std::uint64_t>;
    std::vector<Row> base(n, Row(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m.entries[i].size() != n) throw DomainError("incidence matrix must be square");
        for (std::size_t j = 0; j < n; ++j)
            if (m.entries[i][j] > 0) base[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
    Row full(words, ~std::uint64_t{0});
    if (n % 64) full.back() = (std::uint64_t{1} << (n % 64)) - 1;

    std::vector<Row> power = base;
    for (std::size_t l = 1; l <= n * n; ++l) {
        if (std::all_of(power.begin(), power.end(), [&](const Row& r) { return r == full; })) return true;
        std::vector<Row> next(n, Row(words, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (power[i][k / 64] >> (k % 64) & 1)
                    for (std::size_t w = 0; w < words; ++w) next[i][w] |= base[k][w];
        if (next == power) return false;
        power = std::move(next);
    }
    return false;
}

double pf_eigenvalue(const IncidenceMatrix& m, Tolerance tol) {
    const std::size_t n = m.size();
    if (n == 0) throw GraphError("PF eigenvalue of the empty matrix");
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.entries[i][j] > 0) {
                adj[j].push_back(i);
                entries.push_back({i, j, static_cast<double>(m.entries[i][j])});
            }
    if (!single_component(adj)) throw GraphError("matrix is reducible");
    return perron_root(n, entries, tol);
}

std::string to_dot(const MetricDigraph& g, const std::string& name) {
    std::vector<std::string> vertices = g.labels();
    std::sort(vertices.begin(), vertices.end());
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(g.label(e.source), g.label(e.target), e.length);
    std::stable_sort(edges.begin(), edges.end());

    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (const auto& v : vertices) os << "  \"" << v << "\";\n";
    for (const auto& [s, t, len] : edges) os << "  \"" << s << "\" -> \"" << t << "\" [len=" << len << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace ffl
