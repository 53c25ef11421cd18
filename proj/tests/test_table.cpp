#include <doctest.h>

#include <set>

#include "catsum/expr.hpp"
#include "catsum/table.hpp"

using namespace catsum;

TEST_CASE("fixtures load") {
    auto& t = reference_table();
    REQUIRE(t.size() == 24);
    int by_size[8] = {};
    for (auto& e : t) {
        ++by_size[e.vertices()];
        CHECK(e.series.size() == 7);
        CHECK(centroid_form(parse_plain(e.tree)) == e.tree);
    }
    CHECK(by_size[2] == 1);
    CHECK(by_size[3] == 1);
    CHECK(by_size[4] == 2);
    CHECK(by_size[5] == 3);
    CHECK(by_size[6] == 6);
    CHECK(by_size[7] == 11);
    // every free tree up to 7 vertices appears exactly once
    std::set<std::string> names;
    for (auto& e : t) names.insert(e.tree);
    for (int n = 2; n <= 7; ++n)
        for (auto& s : free_trees(n)) CHECK(names.count(s) == 1);
}

TEST_CASE("table rows up to 6 vertices") {
    Engine e;
    for (auto& row : reference_table()) {
        if (row.vertices() > 6) continue;
        CAPTURE(row.name);
        auto c = check_entry(row, e, true);
        CHECK(c.closed_ok);
        CHECK(c.value_ok);
        CHECK(c.series_ok);
        CHECK(c.oracle_ok);
        CHECK(parse_plain(c.to_json()["tree"].get<std::string>()).size() == row.vertices());
    }
}

TEST_CASE("threaded table") {
    auto rows = check_table(7, 4);
    CHECK(rows.size() == 24);
    for (auto& r : rows) CHECK(r.ok());
}
