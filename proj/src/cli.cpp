#include "ffl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "ffl/atlas.hpp"
#include "ffl/curve_complex.hpp"
#include "ffl/figures.hpp"
#include "ffl/reports.hpp"

namespace ffl::cli {

namespace {

// Usage problems detected after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verification ran to completion but found a mismatch; the report is still
// printed.
struct Options {
    std::string format = "text";
    std::string tolerance = "1e-12";
    std::string out_path;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed, const char* command) {
    for (const char* a : allowed)
        if (format == a) return;
    throw UsageError(std::string("--format ") + format + " is not available for '" + command + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json header(const char* kind, Tolerance tol) {
    return Json{{"schema", schema_version}, {"kind", kind}, {"tolerance", tol.value()}, {"log", "natural"}};
}

struct GraphChoice {
    Family family;
    IjkClass params;
    std::string title;
};

GraphChoice choose_graph(const std::string& class_text, const std::string& family, const std::string& params) {
    if (!family.empty()) {
        if (!class_text.empty()) throw UsageError("give either a class or --family/--params, not both");
        if (params.empty()) throw UsageError("--family needs --params i,j,k");
        std::vector<std::int64_t> v;
        std::stringstream ss(params);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto one = parse_range(item);
            if (one.size() != 1) throw ParseError("expected an integer", item, 0);
            v.push_back(one.front());
        }
        if (v.size() != 3) throw ParseError("expected i,j,k", params, 0);
        const Family f = parse_family(family);
        IjkClass c{v[0], v[1], v[2], f == Family::minus_small_i || f == Family::minus_large_i ||
                                             f == Family::minus_j0_small || f == Family::minus_j0_large
                                         ? Sign::minus
                                         : Sign::plus};
        return {f, c, to_string(f) + " " + params};
    }
    if (class_text.empty()) throw UsageError("a class or --family/--params is required");
    const IjkClass c = parse_ijk(class_text);
    return {family_for(c), c, c.to_string()};
}

MetricDigraph build_graph(const GraphChoice& g) { return gamma_from_figure(g.family, g.params.i, g.params.j, g.params.k); }

std::string shape_name(const CurveComplex& c) {
    // K_{1,n}** when one vertex carries every edge and exactly two are isolated
    std::size_t isolated = 0, center = c.size(), centers = 0;
    for (std::size_t v = 0; v < c.size(); ++v) {
        if (c.degree(v) == 0) ++isolated;
        if (c.degree(v) == c.edge_count() && c.edge_count() > 0) {
            center = v;
            ++centers;
        }
    }
    if (center < c.size() && isolated == 2 && c.edge_count() + 3 == c.size() && (centers == 1 || c.edge_count() == 1))
        return "K_{1," + std::to_string(c.edge_count()) + "}**";
    return std::to_string(c.size()) + " vertices, " + std::to_string(c.edge_count()) + " edges";
}

// ---- subcommands ----

int cmd_info(const Options& o, Tolerance tol, const std::string& cls, std::ostream& os) {
    require_format(o.format, {"text", "json", "csv"}, "info");
    const SequenceEntry e = describe_class(parse_fibered(cls), tol);
    if (o.format == "json") {
        Json j = header("class", tol);
        j["report"] = entry_json(e);
        os << dump(j);
    } else if (o.format == "csv") {
        os << csv_header() << "\n" << csv_row(e, tol) << "\n";
    } else {
        os << class_text(e, tol);
    }
    return exit_ok;
}

int cmd_poly(const Options& o, Tolerance tol, const std::string& cls, const std::string& divisor, std::ostream& os) {
    require_format(o.format, {"text", "json"}, "poly");
    const auto parsed = parse_class(cls);
    const FiberedClass a = parse_fibered(cls);
    const IntPolynomial f = dilatation_polynomial(a);
    const RootBracket b = bracket_largest_real_root(f, tol);
    std::optional<IntPolynomial> formula;
    if (auto* c = std::get_if<IjkClass>(&parsed)) formula = clique_polynomial_formula(*c);
    std::optional<IntPolynomial> d;
    std::optional<DivisionResult> division;
    if (!divisor.empty()) {
        d = IntPolynomial::parse(divisor);
        division = divide_exact(f, *d);
        if (!*division)
            throw DomainError("(" + d->to_string() + ") does not divide " + f.to_string() + "; remainder " +
                              division->remainder.to_string());
    }
    if (o.format == "json") {
        Json j = header("polynomial", tol);
        j["class"] = class_json(a);
        j["polynomial"] = polynomial_json(f);
        j["reciprocal"] = is_reciprocal(f);
        j["lambda"] = b.midpoint();
        j["bracket"] = {b.low, b.high};
        if (formula) j["matches_clique_formula"] = *formula == f;
        if (division) {
            j["divisor"] = polynomial_json(*d);
            j["quotient"] = polynomial_json(*division->quotient);
        }
        os << dump(j);
        return exit_ok;
    }
    os << "class        " << a << "\n"
       << "polynomial   " << f << "\n"
       << "reciprocal   " << (is_reciprocal(f) ? "yes" : "no") << "\n";
    if (formula) os << "clique form  " << (*formula == f ? "equal" : "DIFFERENT: " + formula->to_string()) << "\n";
    if (division) os << "divisor      " << *d << "\n" << "quotient     " << *division->quotient << "\n";
    os << "lambda       " << format_real(b.midpoint(), tol) << "\n"
       << "bracket      [" << format_real(b.low, tol) << ", " << format_real(b.high, tol) << "]\n"
       << "tolerance    " << tol.to_string() << "\n";
    return exit_ok;
}

int cmd_graph(const Options& o, Tolerance tol, const GraphChoice& choice, bool expand, std::ostream& os) {
    require_format(o.format, {"text", "json", "dot"}, "graph");
    MetricDigraph g = build_graph(choice);
    if (expand) g = unit_expand(g);
    if (o.format == "dot") {
        os << to_dot(g, "Gamma");
        return exit_ok;
    }
    const double lambda = growth_rate_spectral(g, tol);
    const IncidenceMatrix m = incidence_matrix(g);
    const bool pf = is_perron_frobenius(m);
    if (o.format == "json") {
        Json j = header("graph", tol);
        j["graph_of"] = choice.title;
        j["family"] = to_string(choice.family);
        j["graph"] = graph_json(g);
        j["growth_rate"] = lambda;
        j["real_edges"] = m.size();
        j["perron_frobenius"] = pf;
        os << dump(j);
        return exit_ok;
    }
    os << "graph of     " << choice.title << "\n"
       << "family       " << to_string(choice.family) << "\n"
       << "vertices     " << g.vertex_count() << "\n"
       << "edges        " << g.edge_count() << "\n"
       << "real edges   " << m.size() << "\n"
       << "growth rate  " << format_real(lambda, tol) << "\n"
       << "PF matrix    " << (pf ? "yes" : "no") << "\n"
       << "tolerance    " << tol.to_string() << "\n";
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(g.label(e.source), g.label(e.target), e.length);
    std::stable_sort(edges.begin(), edges.end());
    for (const auto& [s, t, len] : edges) os << "  " << s << " -> " << t << "  len " << len << "\n";
    return exit_ok;
}

int cmd_complex(const Options& o, Tolerance, const GraphChoice& choice, std::ostream& os) {
    require_format(o.format, {"text", "json", "dot"}, "complex");
    const MetricDigraph g = build_graph(choice);
    const CurveComplex c = build_complex(g);
    if (o.format == "dot") {
        os << to_dot(c, "G");
        return exit_ok;
    }
    const IntPolynomial q = clique_polynomial(c);
    const IntPolynomial formula = clique_polynomial_formula(choice.params);
    const CurveComplex caption = complex_from_caption(choice.family, choice.params.i, choice.params.j, choice.params.k);
    const bool iso = weighted_isomorphic(c, caption);
    if (o.format == "json") {
        Json j{{"schema", schema_version}, {"kind", "complex"}};
        j["complex_of"] = choice.title;
        j["family"] = to_string(choice.family);
        j["complex"] = complex_json(c, &g);
        j["shape"] = shape_name(c);
        j["clique_polynomial"] = polynomial_json(q);
        j["matches_formula"] = q == formula;
        j["matches_caption"] = iso;
        os << dump(j);
        return exit_ok;
    }
    os << "complex of   " << choice.title << "\n"
       << "family       " << to_string(choice.family) << "\n"
       << "shape        " << shape_name(c) << "\n";
    for (std::size_t v = 0; v < c.size(); ++v) {
        os << "  [" << v << "] " << describe(c.curves()[v], g);
        std::vector<std::size_t> nb;
        for (std::size_t w = 0; w < c.size(); ++w)
            if (c.adjacent(v, w)) nb.push_back(w);
        if (!nb.empty()) {
            os << "  disjoint from";
            for (auto w : nb) os << " [" << w << "]";
        }
        os << "\n";
    }
    os << "clique poly  " << q << "\n"
       << "formula      " << (q == formula ? "equal" : "DIFFERENT: " + formula.to_string()) << "\n"
       << "caption      " << (iso ? "isomorphic" : "NOT isomorphic") << "\n";
    return exit_ok;
}

struct VerifyCase {
    std::string name;
    McMullenReport report;
    bool formula_ok = false;
};

VerifyCase verify_one(const IjkClass& c, Tolerance tol) {
    const MetricDigraph g = gamma_for(c);
    VerifyCase v;
    v.name = c.to_string();
    v.report = verify_mcmullen(g, tol);
    v.formula_ok = v.report.polynomial == clique_polynomial_formula(c);
    return v;
}

int cmd_verify(const Options& o, const std::string& tol_text, const std::string& cls, std::optional<std::int64_t> grid,
               std::ostream& os) {
    require_format(o.format, {"text", "json"}, "verify");
    // the check tolerance defaults to 1e-8; root finding uses a finer one
    const Tolerance tol = tol_text.empty() ? Tolerance(1e-8) : Tolerance::parse(tol_text);
    std::vector<IjkClass> classes;
    if (grid) {
        if (!cls.empty()) throw UsageError("give either a class or --grid, not both");
        if (*grid < 1 || *grid > 12) throw DomainError("--grid must be between 1 and 12");
        for (Sign s : {Sign::plus, Sign::minus})
            for (std::int64_t i = 1; i <= *grid; ++i)
                for (std::int64_t j = 1; j <= *grid; ++j)
                    for (std::int64_t k = 1; k <= *grid; ++k) classes.push_back({i, j, k, s});
    } else {
        if (cls.empty()) throw UsageError("verify needs a class or --grid n");
        classes.push_back(parse_ijk(cls));
    }
    std::vector<VerifyCase> cases;
    std::size_t failures = 0;
    for (const auto& c : classes) {
        cases.push_back(verify_one(c, tol));
        if (!cases.back().report.passed || !cases.back().formula_ok) ++failures;
    }
    if (o.format == "json") {
        Json j = header("verify", tol);
        Json arr = Json::array();
        for (const auto& v : cases) {
            Json item = mcmullen_json(v.report);
            item["class"] = v.name;
            item["matches_formula"] = v.formula_ok;
            arr.push_back(item);
        }
        j["checks"] = arr;
        j["count"] = cases.size();
        j["failures"] = failures;
        os << dump(j);
    } else {
        for (const auto& v : cases) {
            const bool ok = v.report.passed && v.formula_ok;
            os << (ok ? "PASS " : "FAIL ") << std::left << std::setw(12) << v.name << " lambda "
               << format_real(v.report.lambda, tol) << "  mu " << format_real(v.report.mu, tol) << "  |lambda*mu-1| "
               << std::scientific << std::setprecision(2) << v.report.product_error << std::defaultfloat
               << (v.formula_ok ? "" : "  clique polynomial differs from formula") << "\n";
        }
        os << cases.size() << " checks, " << failures << " failures, tolerance " << tol.to_string() << "\n";
    }
    return failures == 0 ? exit_ok : exit_verification;
}

int cmd_sequence(const Options& o, Tolerance tol, const std::string& name_text, const std::string& g_range,
                 const std::string& n_range, const std::string& p_range, std::ostream& os) {
    require_format(o.format, {"text", "json", "csv"}, "sequence");
    const SequenceName name = parse_sequence_name(name_text);
    std::vector<SequenceEntry> entries;
    std::vector<std::string> normalized;

    auto emit = [&](std::int64_t param, std::optional<std::int64_t> p) {
        SequenceEntry e = sequence(name, param, p, tol);
        if (name == SequenceName::tsai)
            normalized.push_back("");
        else
            normalized.push_back(format_real(
                static_cast<double>(asymptotic_normalizer(name, param)) * std::log(e.dilatation), tol));
        entries.push_back(std::move(e));
    };

    if (name == SequenceName::tsai) {
        if (g_range.empty() || p_range.empty()) throw UsageError("tsai needs --g <g> and --p <range>");
        const auto gs = parse_range(g_range);
        const auto ps = parse_range(p_range);
        const bool many = gs.size() * ps.size() > 1;
        for (auto g : gs)
            for (auto p : ps) {
                if (many && !sequence_violation(name, g, p).empty()) continue;
                emit(g, p);
            }
    } else {
        const bool genus_indexed = name == SequenceName::LT_even_genus || name == SequenceName::ori79 ||
                                   name == SequenceName::ori15;
        const std::string& range = genus_indexed ? g_range : n_range;
        if (range.empty()) throw UsageError(std::string(genus_indexed ? "--g" : "--n") + " is required for " + name_text);
        const auto params = parse_range(range);
        for (auto v : params) {
            if (params.size() > 1 && !sequence_violation(name, v).empty()) continue;
            emit(v, std::nullopt);
        }
    }

    const std::string column = name == SequenceName::tsai ? "" : asymptotic_limit(name).normalizer + "*log(lambda)";
    if (o.format == "csv") {
        os << csv_header() << ",normalized\n";
        for (std::size_t n = 0; n < entries.size(); ++n) os << csv_row(entries[n], tol) << "," << normalized[n] << "\n";
    } else if (o.format == "json") {
        Json j = header("sequence", tol);
        j["name"] = name_text;
        if (name != SequenceName::tsai) {
            const auto lim = asymptotic_limit(name);
            j["limit"] = {{"value", lim.value}, {"expression", lim.expression}, {"normalizer", lim.normalizer}};
        }
        Json arr = Json::array();
        for (std::size_t n = 0; n < entries.size(); ++n) {
            Json item = entry_json(entries[n]);
            if (!normalized[n].empty()) item["normalized"] = std::stod(normalized[n]);
            arr.push_back(item);
        }
        j["entries"] = arr;
        os << dump(j);
    } else {
        os << "sequence " << name_text;
        if (!column.empty()) {
            const auto lim = asymptotic_limit(name);
            os << "  (limit of " << column << ": " << lim.expression << " = " << format_real(lim.value, tol) << ")";
        }
        os << "\n";
        for (std::size_t n = 0; n < entries.size(); ++n) {
            const auto& e = entries[n];
            os << std::left << std::setw(14) << e.parameter << std::setw(16) << e.cls.to_string() << std::setw(16)
               << e.topology.surface_name() << " lambda " << format_real(e.dilatation, tol);
            if (!column.empty()) os << "  " << column << " " << normalized[n];
            os << "\n";
        }
        os << "tolerance " << tol.to_string() << "\n";
    }
    return exit_ok;
}

int cmd_scan(const Options& o, Tolerance tol, std::int64_t norm_max, const ScanFilter& filter, std::ostream& os) {
    require_format(o.format, {"text", "json", "csv"}, "scan");
    const auto entries = scan(norm_max, filter, tol);
    if (o.format == "csv") {
        os << csv_header() << "\n";
        for (const auto& e : entries) os << csv_row(e, tol) << "\n";
    } else if (o.format == "json") {
        Json j = header("scan", tol);
        j["norm_max"] = norm_max;
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back(entry_json(e));
        j["entries"] = arr;
        os << dump(j);
    } else {
        std::size_t rank = 1;
        for (const auto& e : entries) {
            os << std::right << std::setw(5) << rank++ << "  " << std::left << std::setw(14) << e.cls.to_string()
               << std::setw(5) << norm(e.cls) << std::setw(16) << e.topology.surface_name()
               << (e.topology.orientable ? "orientable  " : "            ") << "lambda "
               << format_real(e.dilatation, tol) << "  ent " << format_real(e.normalized_entropy, tol)
               << (e.has_mirror ? "  (+ swap)" : "") << "\n";
        }
        os << entries.size() << " classes with norm <= " << norm_max << ", tolerance " << tol.to_string() << "\n";
    }
    return exit_ok;
}

int cmd_fill(const Options& o, Tolerance tol, const std::string& cls, const std::string& section, std::ostream& os) {
    require_format(o.format, {"text", "json"}, "fill");
    const FillReport r = fill_and_pull_back(parse_section(section), parse_fibered(cls), tol);
    if (o.format == "json") {
        Json j = header("fill", tol);
        j["report"] = fill_json(r);
        os << dump(j);
        return exit_ok;
    }
    os << "class        " << r.cls << "\n"
       << "section      " << r.section.to_string() << "\n"
       << "fiber        " << r.before.surface_name() << " -> " << r.surface_name() << " (" << r.capped_boundaries
       << " capped)\n"
       << "prongs       " << r.filled_prongs << " at each capped component\n"
       << "pA extension " << (r.extends_pseudo_anosov ? "yes" : "no (1-pronged)") << "\n"
       << "polynomial   " << r.polynomial << "\n"
       << "lambda       " << format_real(r.dilatation, tol) << "\n"
       << "tolerance    " << tol.to_string() << "\n";
    return exit_ok;
}

int cmd_catalogue(const Options& o, Tolerance tol, std::ostream& os) {
    require_format(o.format, {"text", "json"}, "catalogue");
    const auto entries = minimizer_catalogue(tol);
    if (o.format == "json") {
        Json j = header("catalogue", tol);
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back(catalogue_json(e));
        j["entries"] = arr;
        os << dump(j);
        return exit_ok;
    }
    for (const auto& e : entries) {
        os << std::left << std::setw(32) << e.name << format_real(e.value, tol) << "  " << std::setw(12) << e.status
           << std::setw(12) << e.realized_by << e.polynomial << "\n";
    }
    os << "tolerance " << tol.to_string() << "\n";
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of fibered classes of the magic manifold", "ffl"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options o;
    std::string tol_text;
    app.add_option("--format", o.format, "text, json, csv or dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--tolerance", tol_text, "root tolerance, e.g. 1e-12 or 1/1000");
    app.add_option("--out", o.out_path, "write the output to this file");

    std::string cls, divisor, family, params, section, g_range, n_range, p_range, seq_name;
    bool expand = false, orientable = false, non_orientable = false;
    std::optional<std::int64_t> grid, genus;
    std::int64_t norm_max = 0;

    auto* info = app.add_subcommand("info", "norm, fiber topology, polynomial and dilatation of a class");
    info->add_option("class", cls, "x,y,z | i,j,k:+ | i,j,k:- | j,k:0")->required();

    auto* poly = app.add_subcommand("poly", "dilatation polynomial and its largest root");
    poly->add_option("class", cls)->required();
    poly->add_option("--divide", divisor, "exact division by a polynomial such as 't^3 + 1'");

    auto* graph = app.add_subcommand("graph", "induced metric digraph");
    graph->add_option("class", cls);
    graph->add_option("--family", family);
    graph->add_option("--params", params, "i,j,k");
    graph->add_flag("--expand", expand, "subdivide into unit edges");

    auto* complex = app.add_subcommand("complex", "curve complex and clique polynomial");
    complex->add_option("class", cls);
    complex->add_option("--family", family);
    complex->add_option("--params", params, "i,j,k");

    auto* verify = app.add_subcommand("verify", "growth rate against the clique polynomial root");
    verify->add_option("class", cls);
    verify->add_option("--grid", grid, "check (i,j,k)+- for 1 <= i,j,k <= n");

    auto* seq = app.add_subcommand("sequence", "named families of classes");
    seq->add_option("name", seq_name)->required();
    seq->add_option("--g", g_range, "g or a range a..b");
    seq->add_option("--n", n_range, "n or a range a..b");
    seq->add_option("--p", p_range, "p or a range a..b (tsai)");

    auto* scan_cmd = app.add_subcommand("scan", "rank primitive fibered classes by normalized entropy");
    scan_cmd->add_option("--norm-max", norm_max)->required();
    scan_cmd->add_flag("--orientable", orientable);
    scan_cmd->add_flag("--non-orientable", non_orientable);
    scan_cmd->add_option("--genus", genus);
    scan_cmd->add_option("--section", section, "cusp:slope, e.g. beta:-1/2");

    auto* fill = app.add_subcommand("fill", "Dehn filling along a section");
    fill->add_option("class", cls)->required();
    fill->add_option("--section", section, "cusp:slope, e.g. gamma:1")->required();

    auto* catalogue = app.add_subcommand("catalogue", "catalogued minimal dilatations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream buffer;
    try {
        app.parse(reversed);
        const Tolerance tol = tol_text.empty() ? default_tolerance : Tolerance::parse(tol_text);
        int code = exit_ok;
        if (info->parsed()) {
            code = cmd_info(o, tol, cls, buffer);
        } else if (poly->parsed()) {
            code = cmd_poly(o, tol, cls, divisor, buffer);
        } else if (graph->parsed()) {
            code = cmd_graph(o, tol, choose_graph(cls, family, params), expand, buffer);
        } else if (complex->parsed()) {
            code = cmd_complex(o, tol, choose_graph(cls, family, params), buffer);
        } else if (verify->parsed()) {
            code = cmd_verify(o, tol_text, cls, grid, buffer);
        } else if (seq->parsed()) {
            code = cmd_sequence(o, tol, seq_name, g_range, n_range, p_range, buffer);
        } else if (scan_cmd->parsed()) {
            if (orientable && non_orientable) throw UsageError("--orientable and --non-orientable exclude each other");
            ScanFilter f;
            if (orientable) f.orientable = true;
            if (non_orientable) f.orientable = false;
            f.genus = genus;
            if (!section.empty()) f.section = parse_section(section);
            code = cmd_scan(o, tol, norm_max, f, buffer);
        } else if (fill->parsed()) {
            code = cmd_fill(o, tol, cls, section, buffer);
        } else if (catalogue->parsed()) {
            code = cmd_catalogue(o, tol, buffer);
        }
        if (code != exit_ok && code != exit_verification) return code;

        if (o.out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(o.out_path, std::ios::binary);
            if (!file || !(file << buffer.str())) {
                err << "error: cannot write " << o.out_path << "\n";
                return exit_domain;
            }
        }
        return code;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

} // namespace ffl::cli
