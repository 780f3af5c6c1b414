#include "normsurf/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "normsurf/atlas.hpp"
#include "normsurf/criterion.hpp"
#include "normsurf/tables.hpp"
#include "normsurf/zariski.hpp"

namespace normsurf {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(ErrorCode::Syntax, where + ": rationals are integers or \"p/q\" strings");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Syntax, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Syntax, what + ": " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Syntax, "bad weight list '" + text + "'");
        }
    }
    if (out.empty()) throw Error(ErrorCode::Syntax, "empty weight list");
    return out;
}

CurveLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ids") || !j["ids"].is_array() ||
        !j.contains("matrix") || !j["matrix"].is_array())
        throw Error(ErrorCode::Syntax, "curves need an 'ids' array and a 'matrix'");
    std::vector<std::string> ids;
    for (const auto& v : j["ids"]) {
        if (!v.is_string()) throw Error(ErrorCode::Syntax, "curve ids must be strings");
        ids.push_back(v.get<std::string>());
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& jrow : j["matrix"]) {
        if (!jrow.is_array()) throw Error(ErrorCode::Syntax, "matrix rows must be arrays");
        std::vector<Rational> row;
        for (const auto& e : jrow) row.push_back(rational_from_json(e, "matrix"));
        rows.push_back(std::move(row));
    }
    if (rows.size() != ids.size())
        throw Error(ErrorCode::Syntax, "matrix size does not match ids");
    return CurveLattice(std::move(ids), IntersectionMatrix(std::move(rows)));
}

// ---- graph input shared by classify / delta / fundcycle ----------------

struct GraphInput {
    std::string an, dn, graph_file;
    std::vector<int> en; // TYPE MU
    bool smooth = false;

    int selected() const {
        return (!an.empty() ? 1 : 0) + (!dn.empty() ? 1 : 0) + (en.empty() ? 0 : 1) +
               (!graph_file.empty() ? 1 : 0) + (smooth ? 1 : 0);
    }

    DualGraph build() const {
        if (!an.empty()) return make_an(parse_int_list(an));
        if (!dn.empty()) {
            auto semi = dn.find(';');
            if (semi == std::string::npos)
                throw Error(ErrorCode::Syntax, "--dn wants 'chain;leaf,leaf'");
            std::vector<int> chain = parse_int_list(dn.substr(0, semi));
            std::vector<int> leaves = parse_int_list(dn.substr(semi + 1));
            if (leaves.size() != 2)
                throw Error(ErrorCode::Syntax, "--dn wants exactly two leaf weights");
            return make_dn(chain, leaves[0], leaves[1]);
        }
        if (!en.empty()) return make_en({en[0], en[1]});
        return parse_graph(read_file(graph_file));
    }
};

void add_graph_options(CLI::App* cmd, GraphInput& in, bool allow_smooth) {
    cmd->add_option("--an", in.an, "chain weights, e.g. 2,3,2");
    cmd->add_option("--dn", in.dn, "fork: chain;leaf,leaf e.g. 2,3;2,2");
    cmd->add_option("--en", in.en, "E-type family: TYPE MU")->expected(2);
    cmd->add_option("--graph", in.graph_file, "graph document (JSON)");
    if (allow_smooth) cmd->add_flag("--smooth", in.smooth, "a smooth point");
}

std::string cycle_text(const DualGraph& g, const Cycle& c) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < g.size(); ++i) {
        if (c.coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (c.coeffs[i] != Rational(1)) os << c.coeffs[i].str() << "*";
        os << g.vertex(i).id;
    }
    if (first) os << "0";
    return os.str();
}

json cycle_json(const DualGraph& g, const Cycle& c) {
    json out = json::object();
    for (int i = 0; i < g.size(); ++i) out[g.vertex(i).id] = c.coeffs[i].str();
    return out;
}

// ---- subcommand handlers ------------------------------------------------

int cmd_classify(const GraphInput& in, bool as_json, bool delta_only, std::ostream& out) {
    SingularityClass s;
    std::optional<DualGraph> g;
    if (in.smooth) {
        s = classify_smooth();
    } else {
        g = in.build();
        s = classify(*g);
    }
    if (as_json) {
        json j;
        j["kind"] = kind_name(s.kind);
        j["delta_x"] = s.delta_x.str();
        if (g) {
            j["discrepancy"] = cycle_json(*g, s.discrepancy);
            j["fundamental_cycle"] = cycle_json(*g, s.fundamental_cycle);
        }
        out << j.dump() << "\n";
    } else if (delta_only) {
        out << "delta_x = " << s.delta_x.str() << "\n";
    } else {
        out << kind_name(s.kind) << ", delta_x = " << s.delta_x.str() << "\n";
    }
    return 0;
}

int cmd_fundcycle(const GraphInput& in, bool as_json, std::ostream& out) {
    DualGraph g = in.build();
    Cycle z = fundamental_cycle(g);
    if (as_json) {
        json j;
        j["Z"] = cycle_json(g, z);
        out << j.dump() << "\n";
    } else {
        out << "Z = " << cycle_text(g, z) << "\n";
    }
    return 0;
}

int cmd_zariski(const std::string& path, bool as_json, std::ostream& out) {
    json doc = parse_json(read_file(path), "lattice document");
    if (!doc.is_object() || !doc.contains("curves") || !doc.contains("divisor"))
        throw Error(ErrorCode::Syntax, "lattice document needs 'curves' and 'divisor'");
    CurveLattice lattice = lattice_from_json(doc["curves"]);
    const json& jd = doc["divisor"];
    if (!jd.is_object()) throw Error(ErrorCode::Syntax, "'divisor' must be an object");

    DivisorClass d = [&]() {
        if (jd.contains("coeffs")) {
            if (jd.contains("pairings"))
                throw Error(ErrorCode::Syntax, "divisor: give 'coeffs' or 'pairings', not both");
            Vec coeffs(lattice.size());
            for (const auto& [id, value] : jd["coeffs"].items())
                coeffs[lattice.index_of(id)] = rational_from_json(value, "coeffs");
            return DivisorClass::from_coeffs(lattice, std::move(coeffs));
        }
        if (!jd.contains("pairings") || !jd["pairings"].is_object())
            throw Error(ErrorCode::Syntax, "divisor needs 'pairings' (or 'coeffs')");
        Vec pair(lattice.size());
        std::vector<bool> seen(lattice.size(), false);
        for (const auto& [id, value] : jd["pairings"].items()) {
            int i = lattice.index_of(id);
            pair[i] = rational_from_json(value, "pairings");
            seen[i] = true;
        }
        for (int i = 0; i < lattice.size(); ++i)
            if (!seen[i])
                throw Error(ErrorCode::Syntax,
                            "missing pairing for curve '" + lattice.ids()[i] + "'");
        std::optional<Rational> d2;
        if (jd.contains("D2")) d2 = rational_from_json(jd["D2"], "D2");
        return DivisorClass::from_pairings(std::move(pair), std::move(d2));
    }();

    ZariskiDecomposition z = zariski_decompose(d, lattice);
    if (as_json) {
        json j;
        json jn = json::object();
        for (int i = 0; i < lattice.size(); ++i)
            if (!z.n_coeffs[i].is_zero()) jn[lattice.ids()[i]] = z.n_coeffs[i].str();
        j["N"] = jn;
        json jp = json::object();
        for (int i = 0; i < lattice.size(); ++i) jp[lattice.ids()[i]] = z.p_pairings[i].str();
        j["P_pairings"] = jp;
        if (z.p2) j["P2"] = z.p2->str();
        json js = json::array();
        for (int i : z.support) js.push_back(lattice.ids()[i]);
        j["support"] = js;
        out << j.dump() << "\n";
    } else {
        std::ostringstream n_text;
        bool first = true;
        for (int i = 0; i < lattice.size(); ++i) {
            if (z.n_coeffs[i].is_zero()) continue;
            if (!first) n_text << " + ";
            first = false;
            if (z.n_coeffs[i] != Rational(1)) n_text << z.n_coeffs[i].str() << "*";
            n_text << lattice.ids()[i];
        }
        out << "N = " << (first ? "0" : n_text.str()) << "\n";
        for (int i = 0; i < lattice.size(); ++i)
            out << "P." << lattice.ids()[i] << " = " << z.p_pairings[i].str() << "\n";
        if (z.p2) out << "P^2 = " << z.p2->str() << "\n";
    }
    return 0;
}

int cmd_check(const std::string& path, bool as_json, std::ostream& out) {
    json doc = parse_json(read_file(path), "scenario document");
    if (!doc.is_object() || !doc.contains("point") || !doc.contains("D2") ||
        !doc.contains("curves") || !doc.contains("through_x"))
        throw Error(ErrorCode::Syntax,
                    "scenario needs 'point', 'D2', 'curves' and 'through_x'");

    SingularityClass point;
    if (doc["point"].is_string() && doc["point"] == "smooth") {
        point = classify_smooth();
    } else if (doc["point"].is_object() && doc["point"].contains("graph")) {
        point = classify(parse_graph(doc["point"]["graph"].dump()));
    } else {
        throw Error(ErrorCode::Syntax, "'point' is \"smooth\" or {\"graph\": ...}");
    }

    CurveLattice lattice = lattice_from_json(doc["curves"]);
    DivisorData d;
    d.d2 = rational_from_json(doc["D2"], "D2");
    if (doc.contains("pairings")) {
        for (const auto& [id, value] : doc["pairings"].items())
            d.pairings[id] = rational_from_json(value, "pairings");
    }
    std::vector<std::string> through_x;
    for (const auto& v : doc["through_x"]) {
        if (!v.is_string()) throw Error(ErrorCode::Syntax, "'through_x' lists curve ids");
        through_x.push_back(v.get<std::string>());
    }
    long long bound = 10;
    if (doc.contains("bound")) {
        if (!doc["bound"].is_number_integer())
            throw Error(ErrorCode::Syntax, "'bound' must be an integer");
        bound = doc["bound"].get<long long>();
    }

    Verdict v = freeness_verdict(point, d, lattice, through_x, bound);
    if (as_json) {
        json j;
        j["point"] = kind_name(point.kind);
        j["delta_x"] = point.delta_x.str();
        j["verdict"] = v.kind == FreenessKind::Free ? "Free" : "PossiblyNotFree";
        j["caveat"] = v.caveat;
        json jw = json::array();
        for (const auto& w : v.witnesses) {
            json e = json::object();
            for (std::size_t i = 0; i < through_x.size(); ++i)
                if (w.coeffs[i]) e[through_x[i]] = w.coeffs[i];
            jw.push_back({{"E", e}, {"DE", w.de.str()}, {"E2", w.e2.str()}});
        }
        j["witnesses"] = jw;
        out << j.dump() << "\n";
    } else {
        out << "point: " << kind_name(point.kind) << ", delta_x = " << point.delta_x.str()
            << "\n";
        out << "verdict: " << (v.kind == FreenessKind::Free ? "Free" : "PossiblyNotFree")
            << " (" << v.caveat << ")\n";
        for (const auto& w : v.witnesses) {
            std::ostringstream e;
            bool first = true;
            for (std::size_t i = 0; i < through_x.size(); ++i) {
                if (!w.coeffs[i]) continue;
                if (!first) e << " + ";
                first = false;
                if (w.coeffs[i] != 1) e << w.coeffs[i] << "*";
                e << through_x[i];
            }
            out << "witness: E = " << e.str() << ", DE = " << w.de.str()
                << ", E2 = " << w.e2.str() << "\n";
        }
    }
    return 0;
}

int cmd_tables(bool as_json, std::ostream& out) {
    std::vector<CellResult> cells = tables_report();
    std::size_t passed = 0;
    for (const auto& c : cells)
        if (c.pass) ++passed;
    if (as_json) {
        json j;
        json ja = json::array();
        for (const auto& c : cells)
            ja.push_back({{"table", c.table},
                          {"cell", c.cell},
                          {"expected", c.expected},
                          {"got", c.got},
                          {"pass", c.pass}});
        j["cells"] = ja;
        j["passed"] = passed;
        j["total"] = cells.size();
        out << j.dump() << "\n";
    } else {
        for (const auto& c : cells) {
            out << (c.pass ? "PASS" : "FAIL") << " " << c.table << " " << c.cell << ": "
                << c.got;
            if (!c.pass) out << " (expected " << c.expected << ")";
            out << "\n";
        }
        out << "tables: " << passed << "/" << cells.size() << " cells pass\n";
    }
    return passed == cells.size() ? 0 : 2;
}

int cmd_enumerate(const EnumerationSpec& spec, bool certify, int jobs,
                  const std::string& csv_path, bool as_json, std::ostream& out) {
    if (!certify) {
        if (csv_path.empty()) {
            write_csv(spec, out);
        } else {
            std::ofstream f(csv_path);
            if (!f) throw Error(ErrorCode::Syntax, "cannot write '" + csv_path + "'");
            write_csv(spec, f);
        }
        return 0;
    }
    CertReport r = certify_prop1(spec, jobs);
    if (as_json) {
        json j;
        j["total"] = r.total;
        j["not_negative_definite"] = r.excluded_not_negdef;
        j["rational_double_points"] = r.rational_double_points;
        j["log_terminal"] = r.log_terminal;
        j["not_log_terminal"] = r.not_log_terminal;
        j["delta_two_cases"] = r.delta_two;
        j["violations"] = r.violations;
        out << j.dump() << "\n";
    } else {
        out << "graphs enumerated: " << r.total << "\n";
        out << "not negative definite: " << r.excluded_not_negdef << "\n";
        out << "rational double points: " << r.rational_double_points << "\n";
        out << "log terminal: " << r.log_terminal << "\n";
        out << "not log terminal: " << r.not_log_terminal << "\n";
        out << "delta_x = 2 cases: " << r.delta_two << "\n";
        out << "violations: " << r.violations.size() << "\n";
        for (const auto& v : r.violations) out << "violation: " << v << "\n";
    }
    return r.ok() ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"singularity invariants and adjoint freeness checks on normal surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine readable output");

    GraphInput gin;
    auto* classify_cmd = app.add_subcommand("classify", "classify a singular point");
    add_graph_options(classify_cmd, gin, true);
    auto* delta_cmd = app.add_subcommand("delta", "the invariant delta_x");
    add_graph_options(delta_cmd, gin, true);
    auto* fund_cmd = app.add_subcommand("fundcycle", "the fundamental cycle");
    add_graph_options(fund_cmd, gin, false);

    std::string zariski_file;
    auto* zariski_cmd = app.add_subcommand("zariski", "Zariski decomposition over a lattice");
    zariski_cmd->add_option("file", zariski_file, "lattice + divisor document")->required();

    std::string check_file;
    auto* check_cmd = app.add_subcommand("check", "freeness verdict for a scenario");
    check_cmd->add_option("file", check_file, "scenario document")->required();

    auto* tables_cmd = app.add_subcommand("tables", "reproduce every numeric table");

    EnumerationSpec spec;
    bool certify = false;
    int jobs = 1;
    std::string csv_path;
    std::string shapes_text = "chain,fork,star3";
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate weighted graph families");
    enum_cmd->add_option("--max-vertices", spec.max_vertices, "vertex bound")
        ->default_val(8);
    enum_cmd->add_option("--max-weight", spec.max_weight, "weight bound")->default_val(6);
    enum_cmd->add_option("--shapes", shapes_text, "subset of chain,fork,star3");
    enum_cmd->add_flag("--certify", certify, "certify the delta_x <= 2 law instead of CSV");
    enum_cmd->add_option("--jobs", jobs, "parallel workers for --certify")->default_val(1);
    enum_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("normsurf");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (classify_cmd->parsed() || delta_cmd->parsed() || fund_cmd->parsed()) {
            if (gin.selected() != 1)
                throw Error(ErrorCode::InvalidArgument,
                            "give exactly one of --an, --dn, --en, --graph" +
                                std::string(fund_cmd->parsed() ? "" : ", --smooth"));
        }
        if (classify_cmd->parsed()) return cmd_classify(gin, as_json, false, out);
        if (delta_cmd->parsed()) return cmd_classify(gin, as_json, true, out);
        if (fund_cmd->parsed()) return cmd_fundcycle(gin, as_json, out);
        if (zariski_cmd->parsed()) return cmd_zariski(zariski_file, as_json, out);
        if (check_cmd->parsed()) return cmd_check(check_file, as_json, out);
        if (tables_cmd->parsed()) return cmd_tables(as_json, out);
        if (enum_cmd->parsed()) {
            spec.shapes.clear();
            std::stringstream ss(shapes_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "chain") spec.shapes.insert(Shape::Chain);
                else if (item == "fork") spec.shapes.insert(Shape::Fork);
                else if (item == "star3") spec.shapes.insert(Shape::Star3);
                else throw Error(ErrorCode::Syntax, "unknown shape '" + item + "'");
            }
            return cmd_enumerate(spec, certify, jobs, csv_path, as_json, out);
        }
    } catch (const Error& e) {
        err << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
        return e.code() == ErrorCode::Internal ? 2 : 1;
    }
    return 1;
}

} // namespace normsurf
