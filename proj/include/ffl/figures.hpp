#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffl/digraph.hpp"
#include "ffl/homology.hpp"

// Induced directed graphs Gamma_a of the fibered classes (i,j,k)+-, (j,k)_0.
//
// Every graph is a system of chains X_1 -> X_2 -> ... -> X_L of real edges plus
// unit links leaving the top X_L of a chain. The compact form keeps only the
// chain ends and the points where links enter, joined by metric chain edges.
namespace ffl {

enum class Family {
    plus_nondeg,
    plus_j0,
    zero_j0,
    zero_0k,
    minus_small_i,
    minus_large_i,
    minus_j0_small,
    minus_j0_large,
};

std::string to_string(Family f);
Family parse_family(const std::string& text);
const std::vector<Family>& all_families();

struct Chain {
    char name;
    std::int64_t length; // 0 means the chain is absent
};

/// Unit link from the top of chain `from` into position `index` of chain `to`.
struct Link {
    char from;
    char to;
    std::int64_t index = 1;
    std::int64_t multiplicity = 1;
};

struct ChainSystem {
    std::vector<Chain> chains;
    std::vector<Link> links;
};

/// Removes absent chains by composing the links into them with the links out
/// of them. Links into an absent chain must enter at index 1.
ChainSystem eliminate_empty_chains(const ChainSystem& s);

/// Compact metric digraph of a chain system without absent chains.
MetricDigraph compact_graph(const ChainSystem& s);

/// The non-degenerate chain systems, valid also when a chain is absent (in
/// which case eliminate_empty_chains gives the degenerate graph).
ChainSystem plus_system(std::int64_t i, std::int64_t j, std::int64_t k);
ChainSystem minus_system(std::int64_t i, std::int64_t j, std::int64_t k);

/// The per-family tables (degenerate families already reduced).
ChainSystem figure_system(Family f, std::int64_t i, std::int64_t j, std::int64_t k);

/// Gamma_{(i,j,k)+} for i, j, k >= 1.
MetricDigraph gamma_plus(std::int64_t i, std::int64_t j, std::int64_t k);
MetricDigraph gamma_from_figure(Family f, std::int64_t i, std::int64_t j, std::int64_t k);

/// Family whose panel draws the graph of c. The zero form (j,k)_0 uses the
/// plus panels.
Family family_for(const IjkClass& c);
MetricDigraph gamma_for(const IjkClass& c);

/// floor(i/k): the l with 0 <= i - k*l <= k - 1.
std::int64_t window_index(std::int64_t i, std::int64_t k);

/// Two-vertex graph whose incidence matrix is [[3,2],[1,1]].
MetricDigraph seed_graph();

} // namespace ffl
