#include "cli.hpp"

#include "ptri/brauer.hpp"
#include "ptri/flip.hpp"
#include "ptri/format.hpp"
#include "ptri/invariants.hpp"
#include "ptri/potential.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace ptri::cli {
namespace {

using json = nlohmann::ordered_json;

class ValidationFailed : public InputError {
public:
    explicit ValidationFailed(ValidationReport r)
        : InputError("triangulation fails validation: " + r.violations.front().message), report(std::move(r)) {}
    ValidationReport report;
};

struct Options {
    std::string field = "q";
    std::string format = "text";
    std::uint64_t seed = 0;
    std::vector<std::string> set_m, set_lambda;
    std::string file;
};

struct Outcome {
    int code = ok;
    json result = json::object();
    std::ostringstream text;
};

json violations_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back({{"rule", std::string(1, x.rule)}, {"code", x.code}, {"object", x.object}, {"message", x.message}});
    return v;
}

std::pair<std::string, std::string> split_assignment(const std::string& s, const char* flag) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
        throw InputError(std::string(flag) + " expects POINT=VALUE, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

void apply_overrides(PartialTriangulation& t, const Options& o) {
    for (const auto& s : o.set_m) {
        auto [id, value] = split_assignment(s, "--set-m");
        int m = 0;
        try {
            std::size_t used = 0;
            m = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw InputError("--set-m: '" + value + "' is not an integer");
        }
        if (m < 1) throw InputError("--set-m: multiplicity must be at least 1");
        t.points[t.point_index(id)].multiplicity = m;
    }
    for (const auto& s : o.set_lambda) {
        auto [id, value] = split_assignment(s, "--set-lambda");
        const Scalar l = Scalar::parse(t.ring, value);
        if (l.is_zero()) throw InputError("--set-lambda: coefficient of " + id + " must be nonzero");
        t.points[t.point_index(id)].lambda = l;
    }
}

PartialTriangulation load_valid(const Options& o) {
    auto t = load_ptri(o.file, RingSpec::parse(o.field));
    apply_overrides(t, o);
    auto rep = validate(t);
    if (!rep.ok()) throw ValidationFailed(std::move(rep));
    return t;
}

std::string element_text(const std::vector<std::string>& names, const Element& x) {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : x) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + " · " + names[i];
    }
    return s;
}

json element_json(const std::vector<std::string>& names, const Element& x) {
    json a = json::array();
    for (const auto& [i, c] : x) a.push_back({{"basis", names[i]}, {"index", i}, {"coeff", c.to_string()}});
    return a;
}

std::vector<std::string> basis_names(const Algebra& alg) {
    std::vector<std::string> n;
    for (std::size_t i = 0; i < alg.basis().size(); ++i) n.push_back(alg.name(static_cast<int>(i)));
    return n;
}

// e_<arc>, z_<arc> or an arrow word
Element resolve_word(const Algebra& alg, const std::string& w) {
    const auto& t = alg.triangulation();
    if (w.size() > 2 && (w[0] == 'e' || w[0] == 'z') && w[1] == '_') {
        const int arc = t.arc_index(w.substr(2));
        BasisElement b;
        b.kind = w[0] == 'e' ? BasisElement::Kind::idempotent : BasisElement::Kind::socle;
        b.arc = arc;
        const int i = alg.index_of(b);
        if (i < 0) throw InputError("'" + w + "' is not a basis element");
        return Element{{i, Scalar::one(t.ring)}};
    }
    return alg.path_element(parse_arrow_word(alg.quiver(), w));
}

int resolve_end(const PartialTriangulation& t, int arc, const std::string& e) {
    const auto& ends = t.arcs[arc].ends;
    if (e == "0" || e == "1") return e[0] - '0';
    for (int k = 0; k < 2; ++k)
        if (t.halfedges[ends[k]].id == e) return k;
    const int p = t.find_point(e);
    if (p >= 0) {
        if (t.is_loop(arc)) throw InputError("arc " + t.arcs[arc].id + " is a loop; name the end by half-edge");
        for (int k = 0; k < 2; ++k)
            if (t.halfedges[ends[k]].point == p) return k;
    }
    throw InputError("'" + e + "' is not an end of " + t.arcs[arc].id);
}

json invariants_json(const InvariantReport& r) {
    json j = {{"simples", r.simples},
              {"cartan_determinant", r.cartan_determinant.get_str()},
              {"center_dimension", r.center_dimension},
              {"rank", r.total_rank}};
    if (r.symmetric) j["symmetric"] = *r.symmetric;
    return j;
}

void invariants_text(std::ostream& os, const InvariantReport& r, const std::string& indent = "") {
    os << indent << "simples: " << r.simples << "\n"
       << indent << "cartan determinant: " << r.cartan_determinant.get_str() << "\n"
       << indent << "center dimension: " << r.center_dimension << "\n"
       << indent << "rank: " << r.total_rank << "\n";
}

json comparison_json(const DerivedComparison& c) {
    return {{"before", invariants_json(c.first)},
            {"after", invariants_json(c.second)},
            {"simples_agree", c.simples_agree},
            {"cartan_agree", c.cartan_agree},
            {"center_agree", c.center_agree},
            {"consistent", c.consistent()}};
}

json flip_json(const PartialTriangulation& t, const FlipResult& r) {
    const auto& fc = r.flip_case;
    json slides = json::array();
    for (int k = 0; k < 2; ++k) {
        if (!fc.slides[k]) continue;
        const auto& s = *fc.slides[k];
        slides.push_back({{"end", k},
                          {"halfedge", t.halfedges[s.halfedge].id},
                          {"pivot", t.points[s.pivot].id},
                          {"along", t.arcs[s.along].id},
                          {"anchor", t.halfedges[s.anchor].id}});
    }
    json upd = json::object();
    for (const auto& [p, ch] : r.lambda_update)
        upd[t.points[p].id] = {{"before", ch.before.to_string()}, {"after", ch.after.to_string()}};
    return {{"case", to_string(fc.kind)},
            {"arc", t.arcs[fc.arc].id},
            {"direction", fc.counter_clockwise ? "counter-clockwise" : "clockwise"},
            {"slides", slides},
            {"lambda_update", upd},
            {"ptri", serialize_ptri(r.triangulation)}};
}

void flip_text(std::ostream& os, const PartialTriangulation& t, const FlipResult& r) {
    const auto& fc = r.flip_case;
    os << "case: " << to_string(fc.kind) << "\n";
    for (int k = 0; k < 2; ++k)
        if (fc.slides[k])
            os << "slide: " << t.halfedges[fc.slides[k]->halfedge].id << " along " << t.arcs[fc.slides[k]->along].id
               << "\n";
    for (const auto& [p, ch] : r.lambda_update)
        os << "lambda " << t.points[p].id << ": " << ch.before << " -> " << ch.after << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << content;
}

// --- commands ---

void cmd_validate(const Options& o, Outcome& out) {
    auto t = load_ptri(o.file, RingSpec::parse(o.field));
    apply_overrides(t, o);
    const auto rep = validate(t);
    out.result = {{"valid", rep.ok()},
                  {"genus", t.genus},
                  {"boundaries", t.boundary_count},
                  {"points", t.points.size()},
                  {"arcs", t.arcs.size()},
                  {"violations", violations_json(rep)},
                  {"warnings", rep.warnings}};
    if (rep.ok()) {
        out.text << "valid: " << t.points.size() << " points, " << t.arcs.size() << " arcs\n";
    } else {
        out.code = check_failed;
        out.text << "invalid:\n";
        for (const auto& v : rep.violations) out.text << "  (" << v.rule << ") " << v.code << " " << v.object << ": " << v.message << "\n";
    }
    for (const auto& w : rep.warnings) out.text << "warning: " << w << "\n";
}

void cmd_quiver(const Options& o, Outcome& out) {
    const auto t = load_valid(o);
    const auto q = build_quiver(t);
    json arrows = json::array();
    out.text << "arrows:\n";
    for (const auto& a : q.arrows) {
        const auto& from = t.halfedges[a.from];
        const auto& to = t.halfedges[a.to];
        arrows.push_back({{"id", a.id},
                          {"source", t.arcs[a.source_arc].id},
                          {"target", t.arcs[a.target_arc].id},
                          {"point", t.points[a.pivot].id},
                          {"from_halfedge", from.id},
                          {"to_halfedge", to.id}});
        out.text << "  " << a.id << ": " << t.arcs[a.source_arc].id << " -> " << t.arcs[a.target_arc].id << " at "
                 << t.points[a.pivot].id << " (" << from.id << " -> " << to.id << ")\n";
    }
    json vertices = json::array();
    for (int v : q.vertices) vertices.push_back(t.arcs[v].id);
    json triangles = json::array();
    for (const auto& tri : small_triangles(t))
        triangles.push_back({t.arcs[tri.arcs[0]].id, t.arcs[tri.arcs[1]].id, t.arcs[tri.arcs[2]].id});
    out.text << "vertices: " << q.vertices.size() << ", small triangles: " << triangles.size() << "\n";
    out.result = {{"vertices", vertices}, {"arrows", arrows}, {"small_triangles", triangles}};
}

void cmd_rank(const Options& o, Outcome& out) {
    const auto t = load_valid(o);
    const Algebra alg(t);
    const long formula = rank_formula(t);
    const auto n = static_cast<long>(alg.basis().size());
    out.result = {{"rank", n}, {"formula", formula}, {"agree", n == formula}};
    out.text << n << "\n";
    if (n != formula) {
        out.code = check_failed;
        out.text << "basis count differs from the degree formula (" << formula << ")\n";
    }
}

void cmd_basis(const Options& o, Outcome& out) {
    const auto t = load_valid(o);
    const Algebra alg(t);
    json b = json::array();
    for (std::size_t i = 0; i < alg.basis().size(); ++i) {
        const int k = static_cast<int>(i);
        const char* kind = alg.basis()[i].kind == BasisElement::Kind::idempotent ? "idempotent"
                           : alg.basis()[i].kind == BasisElement::Kind::winding  ? "winding"
                                                                                 : "socle";
        const auto& src = t.arcs[alg.source(k)].id;
        const auto& tgt = t.arcs[alg.target(k)].id;
        b.push_back({{"index", i}, {"name", alg.name(k)}, {"kind", kind}, {"source", src}, {"target", tgt}});
        out.text << i << "  " << alg.name(k) << "  " << kind << "  " << src << " -> " << tgt << "\n";
    }
    out.result = {{"rank", alg.basis().size()}, {"basis", b}};
}

json table_json(const StructureConstants& sc, std::ostream& text) {
    json entries = json::array();
    for (std::size_t i = 0; i < sc.size(); ++i)
        for (std::size_t j = 0; j < sc.size(); ++j) {
            const auto& p = sc.at(i, j);
            if (p.is_zero()) continue;
            entries.push_back({{"left", sc.names[i]}, {"right", sc.names[j]}, {"product", sc.names[p.index]},
                               {"coeff", p.coeff.to_string()}});
            text << sc.names[i] << " * " << sc.names[j] << " = " << p.coeff << " · " << sc.names[p.index] << "\n";
        }
    return {{"basis", sc.names}, {"nonzero_products", entries}};
}

void cmd_table(const Options& o, Outcome& out) {
    const Algebra alg(load_valid(o));
    out.result = table_json(alg.structure_table(), out.text);
}

void cmd_mul(const Options& o, const std::string& x, const std::string& y, Outcome& out) {
    const Algebra alg(load_valid(o));
    const auto names = basis_names(alg);
    const auto a = resolve_word(alg, x), b = resolve_word(alg, y);
    const auto p = alg.mul(a, b);
    out.text << element_text(names, p) << "\n";
    out.result = {{"left", element_json(names, a)}, {"right", element_json(names, b)}, {"product", element_json(names, p)},
                  {"text", element_text(names, p)}};
}

void cmd_truncate(const Options& o, const std::vector<std::string>& ids, Outcome& out) {
    const auto t = load_valid(o);
    std::set<int> arcs;
    for (const auto& id : ids) arcs.insert(t.arc_index(id));
    const auto sc = truncate_idempotent(Algebra(t).structure_table(), arcs);
    out.text << "rank: " << sc.size() << "\n";
    std::ostringstream table;
    out.result = table_json(sc, table);
    out.result["rank"] = sc.size();
    out.text << table.str();
}

void cmd_invariants(const Options& o, Outcome& out) {
    const auto t = load_valid(o);
    const auto sc = Algebra(t).structure_table();
    const auto rep = invariant_report(sc, t.arcs.size());
    const auto cm = cartan_matrix(sc, t.arcs.size());
    const auto rad = radical_and_simples(sc);
    invariants_text(out.text, rep);
    out.text << "cartan matrix:\n";
    for (const auto& row : cm.entries) {
        out.text << " ";
        for (long v : row) out.text << " " << v;
        out.text << "\n";
    }
    out.text << "radical: dim " << rad.radical.size() << ", nilpotency index " << rad.nilpotency_index
             << (rad.ok() ? "" : " (radical checks failed)") << "\n";
    out.result = invariants_json(rep);
    out.result["cartan_matrix"] = cm.entries;
    out.result["radical"] = {{"dimension", rad.radical.size()},
                             {"nilpotency_index", rad.nilpotency_index},
                             {"is_ideal", rad.is_ideal},
                             {"nilpotent", rad.nilpotent},
                             {"orthogonal_idempotents", rad.orthogonal_idempotents}};
    if (!rad.ok()) out.code = check_failed;
}

void cmd_symmetric(const Options& o, std::size_t samples, Outcome& out) {
    const auto sc = Algebra(load_valid(o)).structure_table();
    const auto f = symmetrizing_form(sc, samples, o.seed);
    json form = json::object();
    if (f.found)
        for (std::size_t i = 0; i < f.form.size(); ++i)
            if (!f.form[i].is_zero()) form[sc.names[i]] = f.form[i].to_string();
    out.result = {{"symmetric", f.found && f.verified}, {"trace_space_dim", f.trace_space_dim},
                  {"candidates_tried", f.candidates_tried}, {"socle_candidate", f.socle_candidate},
                  {"seed", o.seed}, {"form", form}};
    if (f.found && f.verified) {
        out.text << "symmetric: yes" << (f.socle_candidate ? " (socle-dual form)" : "") << "\n";
        for (const auto& [k, v] : form.items()) out.text << "  t(" << k << ") = " << v.get<std::string>() << "\n";
    } else {
        out.code = check_failed;
        out.text << "symmetric: no form found among " << f.candidates_tried << " candidates (trace space dim "
                 << f.trace_space_dim << ")\n";
    }
}

void cmd_jacobian(const Options& o, std::optional<int> bound, bool oracle, Outcome& out) {
    const Algebra alg(load_valid(o));
    const auto r = jacobian_consistency_check(alg, bound, oracle);
    const auto& q = alg.quiver();
    out.text << "W = " << r.potential.to_string(q) << "\n";
    json ders = json::array();
    for (const auto& [a, holds] : r.derivatives_vanish) {
        ders.push_back({{"arrow", q.arrows[a].id}, {"vanishes", holds}});
        out.text << "d_" << q.arrows[a].id << " W: " << (holds ? "vanishes" : "NONZERO") << "\n";
    }
    out.result = {{"potential", r.potential.to_string(q)}, {"derivatives", ders}, {"rank", r.rank}};
    if (r.oracle) {
        const auto& x = *r.oracle;
        out.result["oracle"] = {{"bound", x.bound}, {"dimension", x.dimension}, {"dimension_next", x.dimension_next},
                                {"paths", x.paths}, {"stabilized", x.stabilized()}};
        out.text << "jacobian quotient: dim " << x.dimension << " at bound " << x.bound << ", " << x.dimension_next
                 << " at " << x.bound + 1 << "; rank " << r.rank << "\n";
    }
    const bool pass = oracle ? r.ok() : r.derivatives_ok();
    out.result["consistent"] = pass;
    out.text << (pass ? "consistent" : "INCONSISTENT") << "\n";
    if (!pass) out.code = check_failed;
}

void comparison_text(std::ostream& os, const TableComparison& c) {
    os << (c.equal ? "equal" : "DIFFERENT") << " (" << c.size_a << " vs " << c.size_b << " basis elements)\n";
    for (const auto& m : c.mismatches) os << "  " << m << "\n";
}

void cmd_brauer_compare(const Options& o, Outcome& out) {
    const auto c = compare_with_delta(load_valid(o));
    comparison_text(out.text, c);
    out.result = {{"equal", c.equal}, {"size_delta", c.size_a}, {"size_brauer", c.size_b}, {"mismatches", c.mismatches}};
    if (!c.equal) out.code = check_failed;
}

void cmd_brauer_embed(const Options& o, const std::string& output, Outcome& out) {
    auto g = load_brauer(o.file, RingSpec::parse(o.field));
    apply_overrides(g.ribbon, o);
    const auto t = embed_brauer_graph(g);
    const auto c = compare_with_delta(t);
    long expected = 0;
    for (std::size_t p = 0; p < g.ribbon.points.size(); ++p) {
        const long d = g.ribbon.degree(static_cast<int>(p));
        expected += g.ribbon.points[p].multiplicity * d * d;
    }
    const std::string text = serialize_ptri(t);
    if (!output.empty()) write_file(output, text);
    const bool pass = c.equal && static_cast<long>(c.size_a) == expected;
    out.text << "# genus " << t.genus << ", " << t.points.size() << " points, rank " << c.size_a << " (expected "
             << expected << "), brauer-compare " << (c.equal ? "equal" : "DIFFERENT") << "\n";
    if (output.empty()) out.text << text;
    out.result = {{"genus", t.genus}, {"points", t.points.size()}, {"rank", c.size_a}, {"expected_rank", expected},
                  {"tables_equal", c.equal}, {"ptri", text}};
    if (!pass) out.code = check_failed;
}

std::optional<int> end_of(const PartialTriangulation& t, int arc, const std::string& e) {
    if (e.empty()) return std::nullopt;
    return resolve_end(t, arc, e);
}

void cmd_flip(const Options& o, const std::string& arc_id, const std::string& end, bool inverse,
              const std::string& output, Outcome& out) {
    const auto t = load_valid(o);
    const int u = t.arc_index(arc_id);
    const auto r = inverse ? inverse_flip(t, u, end_of(t, u, end)) : flip(t, u, end_of(t, u, end));
    const std::string text = serialize_ptri(r.triangulation);
    if (!output.empty()) write_file(output, text);
    flip_text(out.text, t, r);
    if (output.empty()) out.text << text;
    out.result = flip_json(t, r);
}

void cmd_flip_compare(const Options& o, const std::string& arc_id, const std::string& end, Outcome& out) {
    const auto t = load_valid(o);
    const int u = t.arc_index(arc_id);
    const auto c = flip_and_compare(t, u, end_of(t, u, end));
    flip_text(out.text, t, c.result);
    out.text << "before:\n";
    invariants_text(out.text, c.with_update.first, "  ");
    out.text << "after:\n";
    invariants_text(out.text, c.with_update.second, "  ");
    out.text << "derived invariants: " << (c.with_update.consistent() ? "consistent" : "INCONSISTENT") << "\n";
    out.result = flip_json(t, c.result);
    out.result["with_update"] = comparison_json(c.with_update);
    if (c.without_update) {
        out.result["without_update"] = comparison_json(*c.without_update);
        out.text << "without coefficient update: " << (c.without_update->consistent() ? "consistent" : "inconsistent")
                 << "\n";
    }
    out.result["consistent"] = c.with_update.consistent();
    if (!c.with_update.consistent()) out.code = check_failed;
}

json error_json(const std::string& kind, const std::string& message) { return {{"kind", kind}, {"message", message}}; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Algebras of partial triangulations of marked surfaces", "ptri"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "q or fp:<p>");
    app.add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", o.seed);
    app.add_option("--set-m", o.set_m, "POINT=M, repeatable")->allow_extra_args(false);
    app.add_option("--set-lambda", o.set_lambda, "POINT=LAMBDA, repeatable")->allow_extra_args(false);

    auto with_file = [&](const char* name, const char* what) {
        auto* s = app.add_subcommand(name, what);
        s->add_option("file", o.file, ".ptri file")->required();
        return s;
    };
    auto* validate_cmd = with_file("validate", "check the validation rules");
    auto* quiver_cmd = with_file("quiver", "arrow table");
    auto* rank_cmd = with_file("rank", "dimension of the algebra");
    auto* basis_cmd = with_file("basis", "basis elements");
    auto* table_cmd = with_file("table", "nonzero structure constants");
    std::string word_x, word_y;
    auto* mul_cmd = with_file("mul", "product of two words");
    mul_cmd->add_option("x", word_x, "arrow word, e_<arc> or z_<arc>")->required();
    mul_cmd->add_option("y", word_y)->required();
    std::vector<std::string> trunc_arcs;
    auto* trunc_cmd = with_file("truncate", "idempotent truncation");
    trunc_cmd->add_option("--arcs", trunc_arcs)->required()->delimiter(',');
    auto* inv_cmd = with_file("invariants", "derived invariants and radical");
    std::size_t samples = 64;
    auto* sym_cmd = with_file("symmetric", "search for a symmetrising form");
    sym_cmd->add_option("--samples", samples);
    std::optional<int> bound;
    bool no_oracle = false;
    auto* jac_cmd = with_file("jacobian-check", "compare with the Jacobian algebra");
    jac_cmd->add_option("--bound", bound, "path length bound for the quotient");
    jac_cmd->add_flag("--no-oracle", no_oracle, "only check the cyclic derivatives");
    auto* bc_cmd = with_file("brauer-compare", "compare with the Brauer graph algebra");
    std::string output;
    auto* be_cmd = app.add_subcommand("brauer-embed", "embed a Brauer graph");
    be_cmd->add_option("graph", o.file, "Brauer graph file")->required();
    be_cmd->add_option("--output", output);
    std::string arc, end;
    bool inverse = false;
    auto* flip_cmd = with_file("flip", "flip an arc");
    flip_cmd->add_option("--arc", arc)->required();
    flip_cmd->add_option("--end", end, "0, 1, a half-edge or a point");
    flip_cmd->add_flag("--inverse", inverse, "clockwise move");
    flip_cmd->add_option("--output", output);
    auto* fc_cmd = with_file("flip-compare", "flip and compare derived invariants");
    fc_cmd->add_option("--arc", arc)->required();
    fc_cmd->add_option("--end", end);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Outcome res;
    json error;
    try {
        if (validate_cmd->parsed()) cmd_validate(o, res);
        else if (quiver_cmd->parsed()) cmd_quiver(o, res);
        else if (rank_cmd->parsed()) cmd_rank(o, res);
        else if (basis_cmd->parsed()) cmd_basis(o, res);
        else if (table_cmd->parsed()) cmd_table(o, res);
        else if (mul_cmd->parsed()) cmd_mul(o, word_x, word_y, res);
        else if (trunc_cmd->parsed()) cmd_truncate(o, trunc_arcs, res);
        else if (inv_cmd->parsed()) cmd_invariants(o, res);
        else if (sym_cmd->parsed()) cmd_symmetric(o, samples, res);
        else if (jac_cmd->parsed()) cmd_jacobian(o, bound, !no_oracle, res);
        else if (bc_cmd->parsed()) cmd_brauer_compare(o, res);
        else if (be_cmd->parsed()) cmd_brauer_embed(o, output, res);
        else if (flip_cmd->parsed()) cmd_flip(o, arc, end, inverse, output, res);
        else if (fc_cmd->parsed()) cmd_flip_compare(o, arc, end, res);
    } catch (const ParseError& e) {
        res.code = input_error;
        error = error_json("parse", e.what());
        error["line"] = e.line();
    } catch (const ValidationFailed& e) {
        res.code = input_error;
        error = error_json("validation", e.what());
        error["violations"] = violations_json(e.report);
    } catch (const FlipError& e) {
        res.code = input_error;
        error = error_json("flip", e.what());
    } catch (const InputError& e) {
        res.code = input_error;
        error = error_json("input", e.what());
    } catch (const InternalError& e) {
        res.code = internal_error;
        error = error_json("internal", e.what());
    } catch (const std::exception& e) {
        res.code = internal_error;
        error = error_json("internal", e.what());
    }

    if (o.format == "json") {
        json doc = {{"command", command},
                    {"status", error.is_null() ? (res.code == ok ? "ok" : "failed") : "error"},
                    {"exit_code", res.code}};
        if (error.is_null()) doc["result"] = res.result;
        else doc["error"] = error;
        out << doc.dump(2) << "\n";
    } else if (error.is_null()) {
        out << res.text.str();
    } else {
        err << "error: " << error["message"].get<std::string>() << "\n";
        if (error.contains("violations"))
            for (const auto& v : error["violations"])
                err << "  (" << v["rule"].get<std::string>() << ") " << v["message"].get<std::string>() << "\n";
    }
    return res.code;
}

}  // namespace ptri::cli
