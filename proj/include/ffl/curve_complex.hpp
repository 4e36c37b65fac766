#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffl/digraph.hpp"
#include "ffl/figures.hpp"
#include "ffl/polynomial.hpp"

namespace ffl {

/// Directed cycle visiting no vertex twice. vertices[0] is the vertex with the
/// least label; edges[n] leaves vertices[n].
struct SimpleCurve {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    std::int64_t weight = 0;
};

/// Every simple cycle once; parallel edges give distinct cycles. Throws
/// GraphError beyond `limit` cycles.
std::vector<SimpleCurve> simple_cycles(const MetricDigraph& g, std::size_t limit = 1000000);

std::string describe(const SimpleCurve& c, const MetricDigraph& g);

/// Weighted simple graph; vertices are simple curves when built from a digraph.
class CurveComplex {
public:
    std::size_t add_vertex(std::int64_t weight);
    void connect(std::size_t a, std::size_t b);

    std::size_t size() const noexcept { return weights_.size(); }
    std::size_t edge_count() const noexcept;
    std::size_t degree(std::size_t v) const;
    std::int64_t weight(std::size_t v) const { return weights_.at(v); }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
    bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).at(b); }

    const std::vector<SimpleCurve>& curves() const noexcept { return curves_; }

private:
    friend CurveComplex build_complex(const MetricDigraph& g);
    std::vector<std::int64_t> weights_;
    std::vector<std::vector<bool>> adjacency_;
    std::vector<SimpleCurve> curves_;
};

/// Vertices are simple cycles, edges join vertex-disjoint cycles.
CurveComplex build_complex(const MetricDigraph& g);

/// Sum over all cliques K, the empty one included, of (-1)^#K t^w(K).
IntPolynomial clique_polynomial(const CurveComplex& c);

/// K_{1,n}** read off the figure captions: a centre joined to n leaves, plus
/// two isolated vertices.
struct StarShape {
    std::int64_t center = 0;
    std::vector<std::int64_t> leaves;
    std::vector<std::int64_t> isolated;
};

StarShape caption_shape(Family f, std::int64_t i, std::int64_t j, std::int64_t k);
CurveComplex complex_from_shape(const StarShape& s);
CurveComplex complex_from_caption(Family f, std::int64_t i, std::int64_t j, std::int64_t k);

/// Isomorphism preserving weights (backtracking; meant for small complexes).
bool weighted_isomorphic(const CurveComplex& a, const CurveComplex& b);

struct McMullenReport {
    double lambda = 0.0;
    double mu = 0.0;
    double product_error = 0.0;
    double tolerance = 0.0;
    IntPolynomial polynomial;
    bool passed = false;
};

/// Growth rate of g against the smallest positive root of the clique
/// polynomial of its curve complex; passes iff |lambda * mu - 1| < tol.
McMullenReport verify_mcmullen(const MetricDigraph& g, Tolerance tol = Tolerance(1e-8));

/// DOT text, vertex label = weight.
std::string to_dot(const CurveComplex& c, const std::string& name = "G");

} // namespace ffl
