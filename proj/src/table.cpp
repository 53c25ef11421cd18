#include "catsum/table.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "catsum/expr.hpp"

namespace catsum {

extern const char* const table_json_text;

int TableEntry::vertices() const { return parse_plain(tree).size(); }

const std::vector<TableEntry>& reference_table() {
    static const std::vector<TableEntry> table = [] {
        std::vector<TableEntry> out;
        auto j = nlohmann::json::parse(table_json_text);
        for (const auto& r : j.at("entries"))
            out.push_back({r.at("name"), r.at("tree"), r.at("closed_form"), r.at("series").get<std::vector<long>>(),
                           r.at("value")});
        return out;
    }();
    return table;
}

nlohmann::json TableCheck::to_json() const {
    nlohmann::json ser = nlohmann::json::array();
    for (auto& c : series) ser.push_back(to_string(c));
    nlohmann::json j = {{"name", entry.name},
                        {"tree", entry.tree},
                        {"closed_form", sum.str(true)},
                        {"value", value.to_json()},
                        {"series", ser},
                        {"closed_form_ok", closed_ok},
                        {"value_ok", value_ok},
                        {"series_ok", series_ok},
                        {"ok", ok()}};
    if (oracle_checked) j["oracle_ok"] = oracle_ok;
    return j;
}

TableCheck check_entry(const TableEntry& e, Engine& engine, bool oracle) {
    TableCheck c;
    c.entry = e;
    PlainTree t = parse_plain(e.tree);
    c.sum = engine.reduce(t);
    c.value = eval_quarter(c.sum);
    const int n = (int)e.series.size();
    auto ser = series_expand(c.sum, 2 * (n - 1));
    bool odd_zero = true;
    for (int k = 0; k <= ser.order(); ++k) {
        if (k % 2 == 0) c.series.push_back(ser[k]);
        else odd_zero = odd_zero && ser[k] == 0;
    }
    c.closed_ok = c.sum == parse_algebra(e.closed_form, true);
    c.value_ok = c.value == parse_pipoly(e.value);
    c.series_ok = odd_zero;
    for (int k = 0; k < n; ++k) c.series_ok = c.series_ok && c.series[k] == Rational(e.series[k]);
    if (oracle) {
        c.oracle_checked = true;
        c.oracle_ok = brute_force_edge(t, 2 * (n - 1), oracle_budget_from_env()) == ser;
    }
    return c;
}

std::vector<TableCheck> check_table(int max_vertices, unsigned threads, bool oracle) {
    std::vector<TableEntry> rows;
    for (auto& e : reference_table())
        if (e.vertices() <= max_vertices) rows.push_back(e);
    std::vector<TableCheck> out(rows.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<size_t>(rows.size(), 1));
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned w) {
        Engine engine;
        try {
            for (size_t i; (i = next++) < rows.size();) out[i] = check_entry(rows[i], engine, oracle);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace catsum
