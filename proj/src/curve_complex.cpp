#include "ffl/curve_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ffl {

std::vector<SimpleCurve> simple_cycles(const MetricDigraph& g, std::size_t limit) {
    const std::size_t n = g.vertex_count();
    // rank by label so the canonical start is the least label
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.label(a) < g.label(b); });
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

    std::vector<SimpleCurve> out;
    std::vector<bool> on_path(n, false);
    SimpleCurve path;

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
        for (std::size_t ei : g.out_edges(v)) {
            const Edge& e = g.edges()[ei];
            if (e.target == start) {
                SimpleCurve c = path;
                c.edges.push_back(ei);
                c.weight += e.length;
                out.push_back(std::move(c));
                if (out.size() > limit) throw GraphError("more than " + std::to_string(limit) + " simple cycles");
            } else if (rank[e.target] > rank[start] && !on_path[e.target]) {
                on_path[e.target] = true;
                path.edges.push_back(ei);
                path.vertices.push_back(e.target);
                path.weight += e.length;
                dfs(start, e.target);
                path.weight -= e.length;
                path.vertices.pop_back();
                path.edges.pop_back();
                on_path[e.target] = false;
            }
        }
    };

    for (std::size_t s : order) {
        path = SimpleCurve{{s}, {}, 0};
        on_path[s] = true;
        dfs(s, s);
        on_path[s] = false;
    }
    return out;
}

std::string describe(const SimpleCurve& c, const MetricDigraph& g) {
    std::string s;
    for (auto v : c.vertices) s += g.label(v) + " -> ";
    s += g.label(c.vertices.front());
    return s + " (" + std::to_string(c.weight) + ")";
}

std::size_t CurveComplex::add_vertex(std::int64_t weight) {
    if (weight < 1) throw DomainError("curve complex weights must be positive");
    weights_.push_back(weight);
    for (auto& row : adjacency_) row.push_back(false);
    adjacency_.emplace_back(weights_.size(), false);
    return weights_.size() - 1;
}

void CurveComplex::connect(std::size_t a, std::size_t b) {
    if (a >= size() || b >= size()) throw GraphError("complex vertex out of range");
    if (a == b) throw GraphError("curve complex has no loops");
    adjacency_[a][b] = adjacency_[b][a] = true;
}

std::size_t CurveComplex::edge_count() const noexcept {
    std::size_t n = 0;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b) n += adjacency_[a][b];
    return n;
}

std::size_t CurveComplex::degree(std::size_t v) const {
    const auto& row = adjacency_.at(v);
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
}

CurveComplex build_complex(const MetricDigraph& g) {
    CurveComplex c;
    c.curves_ = simple_cycles(g);
    std::vector<std::vector<std::size_t>> sets;
    for (const auto& curve : c.curves_) {
        c.add_vertex(curve.weight);
        auto vs = curve.vertices;
        std::sort(vs.begin(), vs.end());
        sets.push_back(std::move(vs));
    }
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                  std::back_inserter(common));
            if (common.empty()) c.connect(a, b);
        }
    return c;
}

IntPolynomial clique_polynomial(const CurveComplex& c) {
    std::map<std::int64_t, BigInt> terms;
    std::function<void(const std::vector<std::size_t>&, std::int64_t, int)> extend =
        [&](const std::vector<std::size_t>& candidates, std::int64_t weight, int sign) {
            terms[weight] += sign;
            for (std::size_t n = 0; n < candidates.size(); ++n) {
                const std::size_t v = candidates[n];
                std::vector<std::size_t> next;
                for (std::size_t m = n + 1; m < candidates.size(); ++m)
                    if (c.adjacent(v, candidates[m])) next.push_back(candidates[m]);
                extend(next, weight + c.weight(v), -sign);
            }
        };
    std::vector<std::size_t> all(c.size());
    std::iota(all.begin(), all.end(), 0);
    extend(all, 0, 1);

    std::vector<BigInt> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1);
    for (const auto& [d, v] : terms) coeffs[static_cast<std::size_t>(d)] += v;
    return IntPolynomial(std::move(coeffs));
}

StarShape caption_shape(Family f, std::int64_t i, std::int64_t j, std::int64_t k) {
    figure_system(f, i, j, k); // validates the parameters
    StarShape s;
    switch (f) {
    case Family::plus_nondeg:
    case Family::zero_j0:
        s.center = j + k;
        s.leaves = {k, i + k};
        s.isolated = {j + 2 * k, i + j + k};
        break;
    case Family::plus_j0:
    case Family::zero_0k:
        s.center = k;
        s.leaves = {k, i + k, i + k};
        s.isolated = {2 * k, i + 2 * k};
        break;
    case Family::minus_small_i:
    case Family::minus_large_i:
    case Family::minus_j0_small:
    case Family::minus_j0_large: {
        const std::int64_t l = window_index(i, k);
        s.center = k;
        s.leaves = {i + j + k};
        for (std::int64_t m = 1; m <= l; ++m) s.leaves.push_back(j + k * m);
        s.isolated = {i + k, j + k * (l + 1)};
        break;
    }
    }
    return s;
}

CurveComplex complex_from_shape(const StarShape& s) {
    CurveComplex c;
    const std::size_t center = c.add_vertex(s.center);
    for (auto w : s.leaves) c.connect(center, c.add_vertex(w));
    for (auto w : s.isolated) c.add_vertex(w);
    return c;
}

CurveComplex complex_from_caption(Family f, std::int64_t i, std::int64_t j, std::int64_t k) {
    return complex_from_shape(caption_shape(f, i, j, k));
}

bool weighted_isomorphic(const CurveComplex& a, const CurveComplex& b) {
    const std::size_t n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count()) return false;
    auto wa = a.weights(), wb = b.weights();
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    if (wa != wb) return false;

    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t v) {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || a.weight(v) != b.weight(w) || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(image[u], w);
            if (!ok) continue;
            used[w] = true;
            image[v] = w;
            if (place(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return place(0);
}

McMullenReport verify_mcmullen(const MetricDigraph& g, Tolerance tol) {
    const Tolerance solver(std::max(std::min(default_tolerance.value(), tol.value() / 100), 1e-15));
    McMullenReport r;
    r.tolerance = tol.value();
    r.polynomial = clique_polynomial(build_complex(g));
    r.lambda = growth_rate_spectral(g, solver);
    r.mu = smallest_positive_root(r.polynomial, solver);
    r.product_error = std::abs(r.lambda * r.mu - 1.0);
    r.passed = r.product_error < tol.value();
    return r;
}

std::string to_dot(const CurveComplex& c, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < c.size(); ++v) os << "  c" << v << " [label=\"" << c.weight(v) << "\"];\n";
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (c.adjacent(a, b)) os << "  c" << a << " -- c" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ffl
