#pragma once

#include <string>
#include <vector>

#include "catsum/algebra.hpp"
#include "catsum/engine.hpp"
#include "catsum/series.hpp"

namespace catsum {

// One printed row: closed form in the sqrt(t) variable with h1, h2,
// the first seven coefficients of that series, and the value at 1/4.
struct TableEntry {
    std::string name;
    std::string tree;
    std::string closed_form;
    std::vector<long> series;
    std::string value;
    int vertices() const;
};

const std::vector<TableEntry>& reference_table();

struct TableCheck {
    TableEntry entry;
    AlgebraElt sum;
    PiPoly value;
    std::vector<Rational> series;  // coefficients of t^(2n)
    bool closed_ok = false, value_ok = false, series_ok = false;
    bool oracle_checked = false, oracle_ok = false;
    bool ok() const { return closed_ok && value_ok && series_ok && (!oracle_checked || oracle_ok); }
    nlohmann::json to_json() const;
};

TableCheck check_entry(const TableEntry& e, Engine& engine, bool oracle = false);
// Rows with at most max_vertices vertices, one engine per worker thread.
std::vector<TableCheck> check_table(int max_vertices, unsigned threads = 0, bool oracle = false);

}  // namespace catsum
