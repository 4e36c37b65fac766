#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffl/atlas.hpp"
#include "ffl/curve_complex.hpp"
#include "ffl/digraph.hpp"
#include "ffl/homology.hpp"
#include "ffl/polynomial.hpp"

namespace ffl {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "ffl/1";

/// "x,y,z" (z may be negative), "i,j,k:+", "i,j,k:-" or "j,k:0"; whitespace is
/// ignored. Malformed text throws ParseError; a class outside the fibered cone
/// throws DomainError.
std::variant<FiberedClass, IjkClass> parse_class(const std::string& text);
FiberedClass parse_fibered(const std::string& text);
/// The (i,j,k) form of a parsed class, using the swap symmetry when y < x.
IjkClass parse_ijk(const std::string& text);

/// "cusp:slope", e.g. "beta:-1/2" or "gamma:inf".
Section parse_section(const std::string& text);

/// "5", "2..50"; both ends inclusive.
std::vector<std::int64_t> parse_range(const std::string& text);

/// Fixed-point text with as many digits as the tolerance resolves (6..15).
std::string format_real(double v, Tolerance tol);

Json polynomial_json(const IntPolynomial& p);
Json class_json(const FiberedClass& a);
Json topology_json(const FiberTopology& t);
Json entry_json(const SequenceEntry& e);
Json graph_json(const MetricDigraph& g);
Json complex_json(const CurveComplex& c, const MetricDigraph* g = nullptr);
Json mcmullen_json(const McMullenReport& r);
Json fill_json(const FillReport& r);
Json catalogue_json(const CatalogueEntry& c);

/// Header line and one row per entry:
/// param,x,y,z,norm,genus,boundaries,orientable,polynomial,lambda,ent
std::string csv_header();
std::string csv_row(const SequenceEntry& e, Tolerance tol);

/// Multi-line text block describing a class.
std::string class_text(const SequenceEntry& e, Tolerance tol);

} // namespace ffl
