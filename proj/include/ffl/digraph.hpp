#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffl/errors.hpp"
#include "ffl/polynomial.hpp"

namespace ffl {

struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::int64_t length = 1;
};

/// Finite directed multigraph with positive integer edge lengths. Vertices
/// carry unique string labels ("p_1", "r_4", ...).
class MetricDigraph {
public:
    std::size_t add_vertex(const std::string& label);
    /// Adds the vertex if it is not there yet.
    std::size_t ensure_vertex(const std::string& label);
    void add_edge(std::size_t source, std::size_t target, std::int64_t length = 1);
    void add_edge(const std::string& source, const std::string& target, std::int64_t length = 1);

    std::optional<std::size_t> find(const std::string& label) const;
    std::size_t vertex(const std::string& label) const;

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Indices into edges(), in insertion order.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }

    bool is_unit() const noexcept;
    /// Sum of (length - 1): the number of vertices unit_expand adds.
    std::int64_t subdivision_count() const noexcept;

private:
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

/// Subdivides every edge of length m into m unit edges. A chain edge X_a -> X_b
/// of length b - a gets the intermediate labels X_{a+1}, ..., X_{b-1}; other
/// edges get "<src>><tgt>#<edge>.<step>".
MetricDigraph unit_expand(const MetricDigraph& g);

/// Strongly connected components (Tarjan); component id per vertex.
std::vector<std::size_t> strong_components(const MetricDigraph& g);
bool is_strongly_connected(const MetricDigraph& g);

/// Spectral radius of the unit expansion by power iteration (see digraph.cpp).
/// Throws GraphError for empty or non strongly connected graphs.
double growth_rate_spectral(const MetricDigraph& g, Tolerance tol = default_tolerance);

/// N_0(T)^(1/T) with N_0(T) the number of closed directed paths of length <= T
/// in the unit expansion, i.e. sum of tr(A^t) for t = 1..T.
double growth_rate_path_count(const MetricDigraph& g, int horizon);
BigInt closed_path_count(const MetricDigraph& g, int horizon);

struct IncidenceMatrix {
    std::vector<std::string> labels;
    /// entries[i][j] = number of edges j -> i.
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t size() const noexcept { return labels.size(); }
    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

IncidenceMatrix incidence_matrix(const MetricDigraph& g);
IncidenceMatrix make_matrix(std::vector<std::vector<std::int64_t>> entries);

/// Some power M^l, 1 <= l <= n^2, has all entries positive.
bool is_perron_frobenius(const IncidenceMatrix& m);
/// Spectral radius of an irreducible non-negative matrix.
double pf_eigenvalue(const IncidenceMatrix& m, Tolerance tol = default_tolerance);

/// DOT text, vertices and edges sorted by label for stable diffs.
std::string to_dot(const MetricDigraph& g, const std::string& name = "G");

} // namespace ffl
