#include "ffl/figures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace ffl {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr FamilyName family_names[] = {
    {Family::plus_nondeg, "plus_nondeg"},       {Family::plus_j0, "plus_j0"},
    {Family::zero_j0, "zero_j0"},               {Family::zero_0k, "zero_0k"},
    {Family::minus_small_i, "minus_small_i"},   {Family::minus_large_i, "minus_large_i"},
    {Family::minus_j0_small, "minus_j0_small"}, {Family::minus_j0_large, "minus_j0_large"},
};

std::string chain_label(char name, std::int64_t pos) { return std::string(1, name) + "_" + std::to_string(pos); }

// Merge identical links and sort, so equal systems compare equal.
std::vector<Link> normalize(const std::vector<Link>& links) {
    std::map<std::tuple<char, char, std::int64_t>, std::int64_t> merged;
    for (const auto& l : links) merged[{l.from, l.to, l.index}] += l.multiplicity;
    std::vector<Link> out;
    for (const auto& [key, m] : merged)
        if (m > 0) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), m});
    return out;
}

std::string params_text(std::int64_t i, std::int64_t j, std::int64_t k) {
    return "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void require(bool ok, Family f, std::int64_t i, std::int64_t j, std::int64_t k, const char* need) {
    if (!ok) throw DomainError("family " + to_string(f) + " needs " + need + ", got " + params_text(i, j, k));
}

// Links of the minus panels that leave the top of the r chain (or of u when r
// is absent): back to q_1, into p at i-k*l+1 and into u at i-k*m+1, m = 1..l.
void minus_r_links(std::vector<Link>& links, char from, std::int64_t i, std::int64_t k) {
    const std::int64_t l = window_index(i, k);
    links.push_back({from, 'q', 1, 1});
    links.push_back({from, 'p', i - k * l + 1, 1});
    for (std::int64_t m = 1; m <= l; ++m) links.push_back({from, 'u', i - k * m + 1, 1});
}

} // namespace

std::string to_string(Family f) {
    for (const auto& fn : family_names)
        if (fn.family == f) return fn.name;
    return "?";
}

Family parse_family(const std::string& text) {
    for (const auto& fn : family_names)
        if (text == fn.name) return fn.family;
    std::string known;
    for (const auto& fn : family_names) known += std::string(known.empty() ? "" : ", ") + fn.name;
    throw DomainError("unknown family '" + text + "' (expected one of " + known + ")");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (const auto& fn : family_names) v.push_back(fn.family);
        return v;
    }();
    return all;
}

std::int64_t window_index(std::int64_t i, std::int64_t k) {
    if (i < 0 || k < 1) throw DomainError("window index needs i >= 0 and k >= 1");
    return i / k;
}

ChainSystem eliminate_empty_chains(const ChainSystem& s) {
    ChainSystem out;
    std::vector<Link> links = s.links;
    for (const auto& c : s.chains) {
        if (c.length > 0) {
            out.chains.push_back(c);
            continue;
        }
        std::vector<Link> into, from, rest;
        for (const auto& l : links) {
            if (l.to == c.name && l.from == c.name) throw GraphError(std::string("absent chain ") + c.name + " links to itself");
            if (l.to == c.name) {
                if (l.index != 1) throw GraphError(std::string("link into absent chain ") + c.name + " at a position > 1");
                into.push_back(l);
            } else if (l.from == c.name) {
                from.push_back(l);
            } else {
                rest.push_back(l);
            }
        }
        for (const auto& a : into)
            for (const auto& b : from) rest.push_back({a.from, b.to, b.index, a.multiplicity * b.multiplicity});
        links = std::move(rest);
    }
    out.links = normalize(links);
    return out;
}

MetricDigraph compact_graph(const ChainSystem& s) {
    std::map<char, std::int64_t> length;
    for (const auto& c : s.chains) {
        if (c.length < 1) throw GraphError(std::string("chain ") + c.name + " is absent; eliminate it first");
        if (!length.emplace(c.name, c.length).second) throw GraphError(std::string("duplicate chain ") + c.name);
    }
    std::map<char, std::set<std::int64_t>> junctions;
    for (const auto& c : s.chains) junctions[c.name] = {1, c.length};
    for (const auto& l : s.links) {
        if (!length.count(l.from) || !length.count(l.to)) throw GraphError("link refers to an unknown chain");
        if (l.index < 1 || l.index > length[l.to])
            throw GraphError("link enters " + chain_label(l.to, l.index) + " outside the chain");
        junctions[l.to].insert(l.index);
    }

    MetricDigraph g;
    for (const auto& c : s.chains)
        for (auto pos : junctions[c.name]) g.add_vertex(chain_label(c.name, pos));
    for (const auto& c : s.chains) {
        const auto& js = junctions[c.name];
        for (auto it = js.begin(); std::next(it) != js.end(); ++it)
            g.add_edge(chain_label(c.name, *it), chain_label(c.name, *std::next(it)), *std::next(it) - *it);
    }
    for (const auto& l : s.links)
        for (std::int64_t m = 0; m < l.multiplicity; ++m)
            g.add_edge(chain_label(l.from, length[l.from]), chain_label(l.to, l.index), 1);
    return g;
}

ChainSystem plus_system(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i < 0 || j < 0 || k < 1) throw DomainError("plus graph needs i, j >= 0 and k >= 1");
    ChainSystem s;
    s.chains = {{'p', k}, {'q', k}, {'r', j}, {'s', i}};
    // s_i -> p_1 is not drawn explicitly; it is the edge path that remains
    // after eliminating s.
    s.links = {{'p', 'r'}, {'p', 'p'}, {'p', 's'}, {'q', 'r'}, {'q', 'p'},
               {'r', 'q'}, {'r', 's'}, {'s', 'p'}};
    return s;
}

ChainSystem minus_system(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i < 1 || j < 0 || k < 1) throw DomainError("minus graph needs i >= 1, j >= 0 and k >= 1");
    ChainSystem s;
    s.chains = {{'p', k}, {'q', k}, {'r', j}, {'u', i}};
    s.links = {{'p', 'p'}, {'p', 'u'}, {'q', 'u'}, {'u', 'r'}, {'u', 'p'}};
    minus_r_links(s.links, 'r', i, k);
    return s;
}

ChainSystem figure_system(Family f, std::int64_t i, std::int64_t j, std::int64_t k) {
    require(k >= 1 && i >= 0 && j >= 0, f, i, j, k, "i, j >= 0 and k >= 1");
    ChainSystem s;
    switch (f) {
    case Family::plus_nondeg:
        require(i >= 1 && j >= 1, f, i, j, k, "i, j, k >= 1");
        s = plus_system(i, j, k);
        break;
    case Family::plus_j0:
        require(i >= 1 && j == 0, f, i, j, k, "i >= 1 and j = 0");
        s.chains = {{'p', k}, {'q', k}, {'s', i}};
        s.links = {{'p', 'p'}, {'p', 'q'}, {'p', 's', 1, 2}, {'q', 'p'}, {'q', 'q'}, {'q', 's'}, {'s', 'p'}};
        break;
    case Family::zero_j0:
        require(i == 0 && j >= 1, f, i, j, k, "i = 0 and j >= 1");
        s.chains = {{'p', k}, {'q', k}, {'r', j}};
        s.links = {{'p', 'p', 1, 2}, {'p', 'r'}, {'q', 'p'}, {'q', 'r'}, {'r', 'q'}, {'r', 'p'}};
        break;
    case Family::zero_0k:
        require(i == 0 && j == 0, f, i, j, k, "i = j = 0");
        s.chains = {{'p', k}, {'q', k}};
        s.links = {{'p', 'p', 1, 3}, {'p', 'q'}, {'q', 'p', 1, 2}, {'q', 'q'}};
        break;
    case Family::minus_small_i:
        require(i >= 1 && i < k && j >= 1, f, i, j, k, "0 < i < k and j >= 1");
        s = minus_system(i, j, k);
        break;
    case Family::minus_large_i:
        require(i >= k && j >= 1, f, i, j, k, "i >= k and j >= 1");
        s = minus_system(i, j, k);
        break;
    case Family::minus_j0_small:
    case Family::minus_j0_large:
        if (f == Family::minus_j0_small)
            require(i >= 1 && i < k && j == 0, f, i, j, k, "0 < i < k and j = 0");
        else
            require(i >= k && j == 0, f, i, j, k, "i >= k and j = 0");
        s.chains = {{'p', k}, {'q', k}, {'u', i}};
        s.links = {{'p', 'p'}, {'p', 'u'}, {'q', 'u'}, {'u', 'p'}};
        minus_r_links(s.links, 'u', i, k);
        break;
    }
    s.links = normalize(s.links);
    return s;
}

MetricDigraph gamma_plus(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i < 1 || j < 1 || k < 1)
        throw DomainError("gamma_plus needs i, j, k >= 1 (degenerate classes use gamma_from_figure), got " +
                          params_text(i, j, k));
    return compact_graph(plus_system(i, j, k));
}

MetricDigraph gamma_from_figure(Family f, std::int64_t i, std::int64_t j, std::int64_t k) {
    if (f == Family::plus_nondeg) {
        require(i >= 1 && j >= 1 && k >= 1, f, i, j, k, "i, j, k >= 1");
        return gamma_plus(i, j, k);
    }
    return compact_graph(figure_system(f, i, j, k));
}

Family family_for(const IjkClass& c) {
    if (c.i < 0 || c.j < 0 || c.k < 1) throw DomainError("class " + c.to_string() + " has no graph: need i, j >= 0 and k >= 1");
    if (c.i == 0) return c.j == 0 ? Family::zero_0k : Family::zero_j0;
    if (c.sign == Sign::plus) return c.j == 0 ? Family::plus_j0 : Family::plus_nondeg;
    if (c.j == 0) return c.i < c.k ? Family::minus_j0_small : Family::minus_j0_large;
    return c.i < c.k ? Family::minus_small_i : Family::minus_large_i;
}

MetricDigraph gamma_for(const IjkClass& c) { return gamma_from_figure(family_for(c), c.i, c.j, c.k); }

MetricDigraph seed_graph() { return gamma_from_figure(Family::zero_0k, 0, 0, 1); }

} // namespace ffl
