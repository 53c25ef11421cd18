#include <doctest.h>

#include "catsum/engine.hpp"
#include "catsum/expr.hpp"
#include "catsum/series.hpp"

using namespace catsum;

TEST_CASE("generator series") {
    CHECK(generator_series(Generator::C, 3).str() == "1 + t + 2*t^2 + 5*t^3 + O(t^4)");
    CHECK(generator_series(Generator::S, 2).str() == "1 - 2*t - 2*t^2 + O(t^3)");
    // H1 coefficients of t^(2n): 4 Cat_{n-1}^2 for n >= 1
    auto h1 = generator_series(Generator::H1, 16);
    CHECK(h1[0] == 1);
    for (int n = 1; 2 * n <= 16; ++n) {
        Integer c = catalan(n - 1);
        CHECK(h1[2 * n] == Rational(4 * c * c));
        CHECK(h1[2 * n - 1] == 0);
    }
    CHECK(h1.truncated(4).str() == "1 + 4*t^2 + 4*t^4 + O(t^5)");
}

TEST_CASE("series arithmetic") {
    auto c = generator_series(Generator::C, 10);
    auto s = generator_series(Generator::S, 10);
    // s = 1 - 2 t C
    TruncatedSeries lhs = s;
    lhs += c.shifted(1).scaled(2);
    CHECK(lhs.truncated(10) == series_expand(AlgebraElt(1), 10));
    CHECK(s * s == series_expand(parse_algebra("1 - 4*t"), 10));
    CHECK_THROWS_AS(series_expand(parse_algebra("1/t"), 3), NegativePowerResidue);
    CHECK(series_expand(parse_algebra("(H1-1)/(4*t^2)"), 6).str() == "1 + t^2 + 4*t^4 + 25*t^6 + O(t^7)");
}

TEST_CASE("Catalan powers") {
    for (int s = 1; s <= 8; ++s) {
        auto c = generator_series(Generator::C, 12);
        TruncatedSeries p({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        for (int i = 0; i < s; ++i) p = p * c;
        for (int n = 0; n <= 12; ++n) {
            Rational expect = Rational(s * binomial(2 * n + s - 1, n)) / (n + s);
            CHECK(p[n] == expect);
        }
    }
}

TEST_CASE("oracle examples") {
    CHECK(brute_force_edge(parse_plain("(())"), 4).str() == "1 + t^2 + 4*t^4 + O(t^5)");
    CHECK(brute_force_edge(parse_plain("halfedge:()"), 3).str() == "1 + t + 2*t^2 + 5*t^3 + O(t^4)");
    CHECK(brute_force_decorated(canonical_decorate(parse_plain("(())")), 6).str() == "1 + t^2 + 4*t^4 + 25*t^6 + O(t^7)");
    CHECK(brute_force_decorated(canonical_decorate(parse_plain("(()())")), 6).str() == "1 + 2*t^2 + 10*t^4 + 70*t^6 + O(t^7)");
    DecoratedTree single({-1}, {{Color::White, Rel::Eq, 1}});
    CHECK(brute_force_decorated(single, 3).str() == "t + O(t^4)");

    long printed[] = {1, 7, 58, 542, 5508, 59508};
    auto eight = brute_force_edge(parse_plain("((()())(()())())"), 10);
    for (int n = 0; n <= 5; ++n) CHECK(eight[2 * n] == printed[n]);
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS(brute_force_edge(parse_plain("((())())"), 8, 10), BudgetExceeded);
    CHECK_THROWS_AS(brute_force_decorated(canonical_decorate(parse_plain("((())())")), 8, 10), BudgetExceeded);
}

TEST_CASE("edge and vertex oracles agree up to 6 vertices") {
    // the full sweep to 7 vertices runs in the acceptance binary
    for (int n = 1; n <= 6; ++n)
        for (auto& s : rooted_trees(n))
            for (bool half : {false, true}) {
                PlainTree t = parse_plain(s);
                t.halfedge = half;
                CAPTURE(t.str());
                CHECK(brute_force_edge(t, 10) == brute_force_decorated(canonical_decorate(t), 10));
            }
}
