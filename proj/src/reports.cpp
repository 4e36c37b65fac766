#include "ffl/reports.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ffl {

namespace {

struct Piece {
    std::string text;
    std::size_t offset;
};

// Splits the non-blank characters of `text` at `sep`, remembering where each
// piece started in the original string.
std::vector<Piece> split_tracked(const std::string& text, std::size_t base, char sep) {
    std::vector<Piece> out{{"", base}};
    bool started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == sep) {
            out.push_back({"", base + i + 1});
            started = false;
            continue;
        }
        if (!started) {
            out.back().offset = base + i;
            started = true;
        }
        out.back().text += ch;
    }
    return out;
}

std::int64_t parse_component(const Piece& p) {
    const std::string& s = p.text;
    if (s.empty()) throw ParseError("missing coordinate", s, p.offset);
    std::size_t pos = s[0] == '-' ? 1 : 0;
    if (pos == s.size()) throw ParseError("expected an integer", s, p.offset);
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected an integer", s, p.offset);
    if (s.size() - pos > 15) throw ParseError("integer out of range", s, p.offset);
    return std::stoll(s);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json big_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

} // namespace

std::variant<FiberedClass, IjkClass> parse_class(const std::string& text) {
    const auto colon = text.find(':');
    const std::string body = text.substr(0, colon);
    const auto parts = split_tracked(body, 0, ',');
    if (parts.size() == 1 && parts[0].text.empty()) throw ParseError("empty class", "", 0);

    if (colon == std::string::npos) {
        if (parts.size() != 3)
            throw ParseError("expected x,y,z", parts.back().text, parts.back().offset);
        const FiberedClass a{parse_component(parts[0]), parse_component(parts[1]), parse_component(parts[2])};
        require_fibered(a);
        return a;
    }

    const auto suffix_parts = split_tracked(text.substr(colon + 1), colon + 1, '\0');
    const Piece& suffix = suffix_parts.front();
    // only z of the x,y,z form may be negative
    auto count = [](const Piece& p) {
        const std::int64_t v = parse_component(p);
        if (v < 0) throw ParseError("negative coordinate", p.text, p.offset);
        return v;
    };
    IjkClass c;
    if (suffix.text == "0") {
        if (parts.size() != 2) throw ParseError("expected j,k before ':0'", parts.back().text, parts.back().offset);
        c = {0, count(parts[0]), count(parts[1]), Sign::plus};
    } else if (suffix.text == "+" || suffix.text == "-") {
        if (parts.size() != 3) throw ParseError("expected i,j,k before ':+' or ':-'", parts.back().text, parts.back().offset);
        c = {count(parts[0]), count(parts[1]), count(parts[2]), suffix.text == "+" ? Sign::plus : Sign::minus};
    } else {
        throw ParseError("unknown class suffix (expected +, - or 0)", suffix.text, suffix.offset);
    }
    to_xyz(c); // validates i, j >= 0 and k >= 1
    return c;
}

FiberedClass parse_fibered(const std::string& text) {
    auto v = parse_class(text);
    if (auto* a = std::get_if<FiberedClass>(&v)) return *a;
    return to_xyz(std::get<IjkClass>(v));
}

IjkClass parse_ijk(const std::string& text) {
    auto v = parse_class(text);
    if (auto* c = std::get_if<IjkClass>(&v)) return *c;
    const FiberedClass a = std::get<FiberedClass>(v);
    return a.y >= a.x ? from_xyz(a) : from_xyz(swap_symmetry(a));
}

Section parse_section(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected cusp:slope", text, 0);
    Section s;
    std::string cusp = text.substr(0, colon);
    cusp.erase(std::remove_if(cusp.begin(), cusp.end(), [](unsigned char c) { return std::isspace(c); }), cusp.end());
    try {
        s.cusp = parse_cusp(cusp);
    } catch (const DomainError&) {
        throw ParseError("unknown cusp", cusp, 0);
    }
    s.slope = Slope::parse(text.substr(colon + 1));
    return s;
}

std::vector<std::int64_t> parse_range(const std::string& text) {
    auto number = [&](const std::string& s, std::size_t offset) -> std::int64_t {
        return parse_component({s, offset});
    };
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    const auto dots = t.find("..");
    if (dots == std::string::npos) return {number(t, 0)};
    const std::int64_t lo = number(t.substr(0, dots), 0), hi = number(t.substr(dots + 2), dots + 2);
    if (hi < lo) throw ParseError("empty range", t, 0);
    if (hi - lo > 1000000) throw ParseError("range too long", t, 0);
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::string format_real(double v, Tolerance tol) {
    const int digits = std::clamp(static_cast<int>(std::ceil(-std::log10(tol.value()))), 6, 15);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Json polynomial_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(big_json(c));
    return Json{{"coefficients", coeffs}, {"text", p.to_string()}};
}

Json class_json(const FiberedClass& a) { return Json{{"x", a.x}, {"y", a.y}, {"z", a.z}}; }

Json topology_json(const FiberTopology& t) {
    return Json{{"genus", t.genus},
                {"boundaries", {{"alpha", t.boundary_alpha}, {"beta", t.boundary_beta}, {"gamma", t.boundary_gamma}}},
                {"boundary_total", t.boundary_total()},
                {"prongs", {{"alpha", t.prongs_alpha}, {"beta", t.prongs_beta}, {"gamma", t.prongs_gamma}}},
                {"orientable", t.orientable},
                {"surface", t.surface_name()}};
}

Json entry_json(const SequenceEntry& e) {
    const auto face = projection_to_face(e.cls);
    const auto slopes = boundary_slopes(e.cls);
    return Json{{"param", e.parameter},
                {"class", class_json(e.cls)},
                {"coordinates", e.coordinates.to_string()},
                {"norm", norm(e.cls)},
                {"face", {face.u.to_string(), face.v.to_string()}},
                {"topology", topology_json(e.topology)},
                {"slopes", {{"alpha", slopes[0].to_string()}, {"beta", slopes[1].to_string()}, {"gamma", slopes[2].to_string()}}},
                {"polynomial", polynomial_json(e.polynomial)},
                {"lambda", e.dilatation},
                {"ent", e.normalized_entropy},
                {"has_mirror", e.has_mirror}};
}

Json graph_json(const MetricDigraph& g) {
    Json vertices = Json::array(), edges = Json::array();
    for (const auto& l : g.labels()) vertices.push_back(l);
    for (const auto& e : g.edges())
        edges.push_back({{"source", g.label(e.source)}, {"target", g.label(e.target)}, {"length", e.length}});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

Json complex_json(const CurveComplex& c, const MetricDigraph* g) {
    Json vertices = Json::array(), edges = Json::array();
    for (std::size_t v = 0; v < c.size(); ++v) {
        Json item{{"weight", c.weight(v)}};
        if (g && v < c.curves().size()) {
            Json cyc = Json::array();
            for (auto x : c.curves()[v].vertices) cyc.push_back(g->label(x));
            item["cycle"] = cyc;
        }
        vertices.push_back(item);
    }
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (c.adjacent(a, b)) edges.push_back({a, b});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

Json mcmullen_json(const McMullenReport& r) {
    return Json{{"lambda", r.lambda},
                {"mu", r.mu},
                {"product_error", r.product_error},
                {"tolerance", r.tolerance},
                {"polynomial", polynomial_json(r.polynomial)},
                {"passed", r.passed}};
}

Json fill_json(const FillReport& r) {
    return Json{{"section", r.section.to_string()},
                {"class", class_json(r.cls)},
                {"before", topology_json(r.before)},
                {"after", {{"genus", r.genus}, {"boundary_total", r.remaining_boundaries}, {"surface", r.surface_name()}}},
                {"capped_boundaries", r.capped_boundaries},
                {"filled_prongs", r.filled_prongs},
                {"extends_pseudo_anosov", r.extends_pseudo_anosov},
                {"polynomial", polynomial_json(r.polynomial)},
                {"lambda", r.dilatation}};
}

Json catalogue_json(const CatalogueEntry& c) {
    return Json{{"name", c.name},
                {"polynomial", polynomial_json(c.polynomial)},
                {"value", c.value},
                {"realized_by", c.realized_by},
                {"status", c.status}};
}

std::string csv_header() { return "param,x,y,z,norm,genus,boundaries,orientable,polynomial,lambda,ent"; }

std::string csv_row(const SequenceEntry& e, Tolerance tol) {
    std::ostringstream os;
    const std::string param = e.parameter.find(',') == std::string::npos ? e.parameter : "\"" + e.parameter + "\"";
    os << param << ',' << e.cls.x << ',' << e.cls.y << ',' << e.cls.z << ',' << norm(e.cls) << ','
       << e.topology.genus << ',' << e.topology.boundary_total() << ',' << (e.topology.orientable ? "true" : "false")
       << ",\"" << e.polynomial.to_string() << "\"," << format_real(e.dilatation, tol) << ','
       << format_real(e.normalized_entropy, tol);
    return os.str();
}

std::string class_text(const SequenceEntry& e, Tolerance tol) {
    const auto& t = e.topology;
    const auto face = projection_to_face(e.cls);
    const auto slopes = boundary_slopes(e.cls);
    std::ostringstream os;
    os << "class        " << e.cls.to_string() << "\n"
       << "coordinates  " << e.coordinates.to_string() << "\n"
       << "norm         " << norm(e.cls) << "\n"
       << "face         [" << face.u.to_string() << ", " << face.v.to_string() << "]\n"
       << "fiber        " << t.surface_name() << "\n"
       << "boundaries   alpha " << t.boundary_alpha << ", beta " << t.boundary_beta << ", gamma " << t.boundary_gamma
       << "\n"
       << "prongs       alpha " << t.prongs_alpha << ", beta " << t.prongs_beta << ", gamma " << t.prongs_gamma << "\n"
       << "orientable   " << yes_no(t.orientable) << "\n"
       << "slopes       alpha " << slopes[0] << ", beta " << slopes[1] << ", gamma " << slopes[2] << "\n"
       << "polynomial   " << e.polynomial << "\n"
       << "lambda       " << format_real(e.dilatation, tol) << "\n"
       << "ent          " << format_real(e.normalized_entropy, tol) << "  (norm * ln lambda)\n"
       << "tolerance    " << tol.to_string() << "\n";
    return os.str();
}

} // namespace ffl
