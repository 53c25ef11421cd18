#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "catsum/engine.hpp"
#include "catsum/meander.hpp"
#include "catsum/series.hpp"
#include "catsum/stars.hpp"
#include "catsum/table.hpp"

using namespace catsum;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 mismatch, 2 parse error, 3 oracle budget exhausted, 4 internal error
constexpr int kMismatch = 1, kParse = 2, kBudget = 3, kInternal = 4;

bool as_json = false;

void emit(const json& j, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Input {
    bool decorated = false;
    PlainTree plain;
    DecoratedTree tree;
    std::string label;
};

Input plain_input(const std::string& text) {
    Input in;
    in.plain = parse_plain(text);
    in.tree = canonical_decorate(in.plain);
    in.label = in.plain.str();
    return in;
}

Input decorated_input(const std::string& path) {
    Input in;
    in.decorated = true;
    in.tree = parse_decorated_text(read_file(path));
    in.label = in.tree.str();
    return in;
}

bool trace = false;

Engine make_engine() { return Engine({true, false, 100000, trace ? &std::cerr : nullptr}); }

TruncatedSeries oracle_series(const Input& in, int order) {
    auto budget = oracle_budget_from_env();
    return in.decorated ? brute_force_decorated(in.tree, order, budget) : brute_force_edge(in.plain, order, budget);
}

int cmd_sum(const Input& in, bool sqrt_t) {
    Engine engine = make_engine();
    AlgebraElt r = engine.reduce(in.tree);
    PiPoly v = eval_quarter(r);
    std::string text = r.str(sqrt_t);
    json j = {{"tree", in.label}, {"closed_form", r.to_json()}, {"value", v.to_json()}};
    if (sqrt_t) j["closed_form_sqrt_t"] = text;
    emit(j, text + "\n" + v.pretty() + " ≈ " + v.decimal(12) + "\n");
    return 0;
}

int cmd_series(const Input& in, int order, bool oracle) {
    Engine engine = make_engine();
    auto se = series_expand(engine.reduce(in.tree), order);
    json j = {{"tree", in.label}, {"order", order}, {"series", se.to_json()}};
    std::string text = se.str() + "\n";
    int rc = 0;
    if (oracle) {
        bool same = oracle_series(in, order) == se;
        j["oracle"] = same ? "match" : "mismatch";
        text += std::string("oracle: ") + (same ? "match" : "MISMATCH") + "\n";
        rc = same ? 0 : kMismatch;
    }
    emit(j, text);
    return rc;
}

int cmd_verify(const Input& in, int order) {
    Engine engine = make_engine();
    auto se = series_expand(engine.reduce(in.tree), order);
    auto bf = oracle_series(in, order);
    bool same = se == bf;
    json j = {{"tree", in.label}, {"order", order}, {"match", same}, {"engine", se.to_json()}, {"oracle", bf.to_json()}};
    std::string text = std::string(same ? "OK" : "MISMATCH") + " " + in.label + " to order " + std::to_string(order) + "\n";
    if (!same) text += "  engine: " + se.str() + "\n  oracle: " + bf.str() + "\n";
    emit(j, text);
    return same ? 0 : kMismatch;
}

int cmd_meander(const Meander& m) {
    Engine engine = make_engine();
    json j = meander_report(m, engine);
    std::ostringstream os;
    os << m.str() << "\nfaces:\n";
    for (auto& f : j["faces"]) {
        os << "  " << f["side"].get<std::string>() << " " << f["arc"][0] << "-" << f["arc"][1] << "  I = {";
        bool first = true;
        for (auto& i : f["indices"]) os << (first ? "" : ",") << i, first = false;
        os << "}" << (f["interior"].get<bool>() ? "  interior" : "") << "\n";
    }
    os << "forest:";
    for (auto& c : j["forest"]) os << " " << c["tree"].get<std::string>();
    os << "\nprobability: " << j["probability"]["text"].get<std::string>() << " ≈ "
       << j["probability"]["decimal"].get<std::string>() << "\n";
    emit(j, os.str());
    return 0;
}

int cmd_star(long s, long partial) {
    Engine engine = make_engine();
    PiPoly v = star_eval(s, engine);
    json j = {{"s", s}, {"value", v.to_json()}};
    std::string text = "A_" + std::to_string(s) + " = " + v.pretty() + " ≈ " + v.decimal(12) + "\n";
    int rc = 0;
    if (s >= 1) {
        auto [hom, inhom] = star_recurrence_residual(s);
        j["residual_homogeneous"] = hom.to_json();
        j["residual_inhomogeneous"] = inhom.to_json();
        text += "recurrence residuals: " + hom.pretty() + ", " + inhom.pretty() + "\n";
        if (!hom.is_zero() || !inhom.is_zero()) rc = kMismatch;
    }
    if (s >= 3) {
        PiPoly bc = star_eval_crosscheck_BC(s - 3);
        j["bc_crosscheck"] = bc == v;
        text += std::string("B/C cross-check: ") + (bc == v ? "match" : "MISMATCH") + "\n";
        if (!(bc == v)) rc = kMismatch;
    }
    if (partial > 0 && s >= 1) {
        Rational p = star_3f2_partial(s, partial);
        double diff = v.to_double() - p.get_d();
        j["partial"] = {{"terms", partial}, {"value", p.get_d()}, {"gap", diff}};
        std::ostringstream os;
        os.precision(12);
        os << "3F2 partial sum (" << partial << " terms): " << p.get_d() << ", gap " << diff << "\n";
        text += os.str();
    }
    emit(j, text);
    return rc;
}

int cmd_table(int max_vertices, unsigned threads, bool oracle) {
    auto checks = check_table(max_vertices, threads, oracle);
    json arr = json::array();
    std::ostringstream os;
    int good = 0;
    for (auto& c : checks) {
        arr.push_back(c.to_json());
        good += c.ok();
        os << (c.ok() ? "ok   " : "FAIL ") << c.entry.name << "  " << c.entry.tree << "\n     " << c.sum.str(true)
           << "\n     " << c.value.pretty() << "\n";
        if (!c.closed_ok) os << "     closed form differs from " << c.entry.closed_form << "\n";
        if (!c.value_ok) os << "     value differs from " << c.entry.value << "\n";
        if (!c.series_ok) os << "     series prefix differs\n";
        if (c.oracle_checked && !c.oracle_ok) os << "     oracle disagrees\n";
    }
    os << good << "/" << checks.size() << " match\n";
    emit(json{{"entries", arr}, {"matched", good}, {"total", checks.size()}}, os.str());
    return good == (int)checks.size() ? 0 : kMismatch;
}

int fail(int code, const std::string& kind, const std::string& msg) {
    if (as_json) std::cout << json{{"error", kind}, {"message", msg}}.dump(2) << "\n";
    else std::cerr << "error: " << msg << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Catalan sums over trees"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_flag("--trace", trace, "Log each reduction step to stderr");

    std::string tree_text, file, upper, lower, meander_text;
    int order = 8, max_vertices = 7;
    unsigned threads = 0;
    bool sqrt_t = false, oracle = false;
    long s = 0, partial = 0;

    auto* sum = app.add_subcommand("sum", "Closed form and value at t = 1/4");
    sum->add_option("tree", tree_text, "Tree as nested parentheses, '-' prefix for a half-edge")->required();
    sum->add_flag("--sqrt-t", sqrt_t, "Print in the variable sqrt(t)");

    auto* series = app.add_subcommand("series", "Series expansion of the closed form");
    series->add_option("tree", tree_text)->required();
    series->add_option("--order", order)->check(CLI::NonNegativeNumber);
    series->add_flag("--oracle", oracle, "Compare with the brute-force oracle");

    auto* verify = app.add_subcommand("verify", "Engine series against the oracle");
    verify->add_option("tree", tree_text, "Tree text or a decorated-tree JSON file")->required();
    verify->add_option("--order", order)->check(CLI::NonNegativeNumber);

    auto* dec = app.add_subcommand("decorated", "Same verbs on a decorated tree given as JSON");
    dec->require_subcommand(1);
    auto* dsum = dec->add_subcommand("sum");
    dsum->add_option("file", file)->required();
    dsum->add_flag("--sqrt-t", sqrt_t);
    auto* dseries = dec->add_subcommand("series");
    dseries->add_option("file", file)->required();
    dseries->add_option("--order", order)->check(CLI::NonNegativeNumber);
    dseries->add_flag("--oracle", oracle);
    auto* dverify = dec->add_subcommand("verify");
    dverify->add_option("file", file)->required();
    dverify->add_option("--order", order)->check(CLI::NonNegativeNumber);

    auto* mea = app.add_subcommand("meander", "Faces, forest and shape probability");
    auto* up = mea->add_option("--upper", upper, "Upper arcs, e.g. 0-1,2-3");
    auto* lo = mea->add_option("--lower", lower, "Lower arcs");
    auto* tx = mea->add_option("--text", meander_text, "'upper: ...; lower: ...'");
    up->needs(lo);
    lo->needs(up);
    tx->excludes(up)->excludes(lo);

    auto* star = app.add_subcommand("star", "Star value, recurrences and cross-checks");
    star->add_option("--s", s, "Number of leaves")->required()->check(CLI::NonNegativeNumber);
    star->add_option("--partial", partial, "Also sum this many 3F2 terms")->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("table", "Recompute the reference table and diff against the fixtures");
    table->add_option("--max-vertices", max_vertices)->check(CLI::Range(2, 7));
    table->add_option("--threads", threads, "Worker threads, 0 = hardware");
    table->add_flag("--oracle", oracle, "Also compare each row with the oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParse;
    }

    try {
        if (*sum) return cmd_sum(plain_input(tree_text), sqrt_t);
        if (*series) return cmd_series(plain_input(tree_text), order, oracle);
        if (*verify) {
            bool is_file = std::filesystem::is_regular_file(tree_text);
            return cmd_verify(is_file ? decorated_input(tree_text) : plain_input(tree_text), order);
        }
        if (*dsum) return cmd_sum(decorated_input(file), sqrt_t);
        if (*dseries) return cmd_series(decorated_input(file), order, oracle);
        if (*dverify) return cmd_verify(decorated_input(file), order);
        if (*mea) {
            if (meander_text.empty() && upper.empty()) throw ParseError("give --upper/--lower or --text");
            Meander m = meander_text.empty() ? make_meander(parse_arcs(upper), parse_arcs(lower)) : parse_meander(meander_text);
            return cmd_meander(m);
        }
        if (*star) return cmd_star(s, partial);
        if (*table) return cmd_table(max_vertices, threads, oracle);
    } catch (const ParseError& e) {
        return fail(kParse, "parse", e.what());
    } catch (const BudgetExceeded& e) {
        return fail(kBudget, "budget", e.what());
    } catch (const std::exception& e) {
        return fail(kInternal, "internal", e.what());
    }
    return 0;
}
