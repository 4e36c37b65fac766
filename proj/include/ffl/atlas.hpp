#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffl/homology.hpp"
#include "ffl/polynomial.hpp"

namespace ffl {

/// S_c(r): classes whose boundary slope on the cusp c equals r.
struct Section {
    Cusp cusp = Cusp::beta;
    Slope slope = Slope::infinity();

    std::string to_string() const;
};

/// alpha: -r x = y + z, beta: -r y = z + x, gamma: -r z = x + y, in the
/// homogeneous form r = p/q (so S_c(inf) is x = 0, y = 0 or z = 0).
bool in_section(const Section& s, const FiberedClass& a);

/// Filling along r is hyperbolic unless r is one of inf, -3, -2, -1, 0.
bool is_hyperbolic_filling(const Slope& r);

enum class SequenceName { LT_even_genus, ori79, ori15, whitehead, braid1, braid2, tsai };

std::string to_string(SequenceName n);
SequenceName parse_sequence_name(const std::string& text);
const std::vector<SequenceName>& all_sequences();

struct SequenceEntry {
    std::string parameter; // "g=4", "n=3", "(g,p)=(1,3)"
    std::int64_t index = 0; // g, n, or p for tsai
    IjkClass coordinates;
    FiberedClass cls;
    FiberTopology topology;
    IntPolynomial polynomial;
    double dilatation = 0.0;
    /// norm * log(dilatation), natural log.
    double normalized_entropy = 0.0;
    /// (y,x,z) is a different class with the same invariants.
    bool has_mirror = false;
};

/// Builds one member of a named family. For tsai, `param` is g and `p` the
/// second index. Throws DomainError naming the required residues.
SequenceEntry sequence(SequenceName name, std::int64_t param, std::optional<std::int64_t> p = std::nullopt,
                       Tolerance tol = default_tolerance);
/// Parameter check without building; empty string when valid.
std::string sequence_violation(SequenceName name, std::int64_t param, std::optional<std::int64_t> p = std::nullopt);

/// p_i = (g+1) + i(2g+1).
std::int64_t tsai_parameter(std::int64_t g, std::int64_t i);

struct AsymptoticRow {
    std::string parameter;
    std::int64_t index = 0;
    double dilatation = 0.0;
    std::int64_t normalizer = 0;
    double value = 0.0; // normalizer * log(dilatation)
    double limit = 0.0;
    double relative_error = 0.0;
};

struct AsymptoticLimit {
    double value = 0.0;
    std::string expression;
    std::string normalizer; // "g", "2n-1", "4n+2"
};

/// Throws DomainError for tsai (no limit of that kind).
AsymptoticLimit asymptotic_limit(SequenceName name);
std::int64_t asymptotic_normalizer(SequenceName name, std::int64_t param);
/// Invalid parameters in the list are skipped.
std::vector<AsymptoticRow> asymptotic_report(SequenceName name, const std::vector<std::int64_t>& params,
                                             Tolerance tol = default_tolerance);

struct CatalogueEntry {
    std::string name;
    IntPolynomial polynomial;
    double value = 0.0;
    std::string realized_by; // class whose dilatation equals the value, if any
    std::string status;      // "proven" or "conjectural"
};

/// Values recomputed from their polynomials on every call.
std::vector<CatalogueEntry> minimizer_catalogue(Tolerance tol = default_tolerance);

struct ScanFilter {
    std::optional<bool> orientable;
    std::optional<std::int64_t> genus;
    std::optional<Section> section;
};

inline constexpr std::int64_t default_scan_cap = 200;

/// All primitive fibered (x,y,z) with y >= x and norm <= norm_max, ascending by
/// normalized entropy, ties broken by (x,y,z). Runs on FFL_THREADS threads
/// (default: hardware concurrency); the order does not depend on it.
std::vector<SequenceEntry> scan(std::int64_t norm_max, const ScanFilter& filter = {},
                                Tolerance tol = default_tolerance, std::int64_t cap = default_scan_cap);

/// Builds a SequenceEntry for an arbitrary primitive fibered class.
SequenceEntry describe_class(const FiberedClass& a, Tolerance tol = default_tolerance);

struct FillReport {
    Section section;
    FiberedClass cls;
    FiberTopology before;
    std::int64_t genus = 0;
    std::int64_t capped_boundaries = 0;   // components capped off on the filled cusp
    std::int64_t remaining_boundaries = 0;
    std::int64_t filled_prongs = 0;
    /// false when a capped component is 1-pronged: the monodromy of the
    /// filled fiber is then not pseudo-Anosov, though the number is reported.
    bool extends_pseudo_anosov = true;
    IntPolynomial polynomial;
    double dilatation = 0.0;

    std::string surface_name() const;
};

/// Throws DomainError if a is not in the section or the slope is exceptional.
FillReport fill_and_pull_back(const Section& s, const FiberedClass& a, Tolerance tol = default_tolerance);

} // namespace ffl
