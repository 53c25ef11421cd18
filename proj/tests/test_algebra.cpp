#include <doctest.h>

#include <random>

#include "catsum/algebra.hpp"
#include "catsum/expr.hpp"
#include "catsum/series.hpp"

using namespace catsum;

namespace {

AlgebraElt random_elt(std::mt19937& rng) {
    AlgebraElt x;
    int terms = 1 + (int)(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        Mono m{(int)(rng() % 3), (int)(rng() % 3), (int)(rng() % 2)};
        Rational c((long)(rng() % 19) - 9, 1 + (long)(rng() % 5));
        c.canonicalize();
        x += AlgebraElt::term(m, LaurentPoly::monomial(c, (long)(rng() % 7) - 3));
    }
    return x;
}

// (a)_n rising factorial of a half-integer given as num/2
Rational rising(Rational a, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

// 2F1(-1/2, K-1/2; K+1; 16 t^2) through t^N
TruncatedSeries direct_HK(long K, int N) {
    TruncatedSeries s(N);
    for (int n = 0; 2 * n <= N; ++n) {
        Rational c = rising(Rational(-1, 2), n) * rising(Rational(2 * K - 1, 2), n) / rising(Rational(K + 1), n);
        for (int i = 1; i <= n; ++i) c /= i;
        for (int i = 0; i < n; ++i) c *= 16;
        s[2 * n] = c;
    }
    return s;
}

}  // namespace

TEST_CASE("ring basics") {
    AlgebraElt H1 = AlgebraElt::H1(), s = AlgebraElt::s();
    AlgebraElt t = AlgebraElt(LaurentPoly::t());
    CHECK((H1 + (-H1)).is_zero());
    CHECK(parse_algebra("(H1-1)/(4*t^2) + (1-H1)/(4*t^2)").is_zero());
    CHECK(AlgebraElt(1) + (H1 - AlgebraElt(1)) == H1);
    CHECK(s * s == AlgebraElt(1) - t.scaled(4));
    CHECK(H1 * AlgebraElt(1) == H1);
    AlgebraElt c = catalan_gf();
    CHECK(c * c == parse_algebra("(2 - 4*t - 2*s)/(4*t^2)"));
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        AlgebraElt a = random_elt(rng), b = random_elt(rng), c = random_elt(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
        CHECK(eval_quarter(a * b) == eval_quarter(a) * eval_quarter(b));
        CHECK(eval_quarter(a + b) == eval_quarter(a) + eval_quarter(b));
        CHECK(series_expand(a.shifted(4) * b.shifted(4), 12) ==
              (series_expand(a.shifted(4), 12) * series_expand(b.shifted(4), 12)));
    }
}

TEST_CASE("degree") {
    CHECK(AlgebraElt::H1().degree() == 2);
    CHECK(AlgebraElt::s().degree() == 1);
    CHECK(parse_algebra("(H1-1)/(4*t^2)").degree() == 2);
    CHECK(!AlgebraElt().degree());
    CHECK(parse_algebra("H1*H2^2*s + t^9").degree() == 7);
}

TEST_CASE("rendering and parsing round trip") {
    CHECK(parse_algebra("(H1 - 1)/(4*t^2)").str() == "(H1 - 1)/(4*t^2)");
    CHECK(parse_algebra("(H1 - 1)/(4*t^2)").str(true) == "(H1 - 1)/(4*t)");
    CHECK(parse_algebra("(1-h2)/(2*t)", true) == parse_algebra("(1-H2)/(2*t^2)"));
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        AlgebraElt a = random_elt(rng);
        CHECK(parse_algebra(a.str()) == a);
        PiPoly p = eval_quarter(a);
        CHECK(parse_pipoly(p.pretty()) == p);
        CHECK(parse_pipoly(p.canonical()) == p);
    }
    CHECK(parse_pipoly("16/pi - 4").pretty() == "16/pi - 4");
    CHECK(parse_pipoly("64/(15*pi)") == PiPoly::inv_pi(Rational(64, 15)));
    CHECK_THROWS_AS(parse_algebra("H3 + 1"), ParseError);
    CHECK_THROWS_AS(parse_algebra("1/(1+t)"), ParseError);
}

TEST_CASE("hypergeometric family") {
    CHECK(hypergeom_HK(0) == AlgebraElt::H1());
    CHECK(hypergeom_HK(1) == AlgebraElt::H2());
    AlgebraElt z = AlgebraElt(LaurentPoly::monomial(16, 2));
    AlgebraElt one(1);
    // 8/(5z) ((1+z) H2 - H1)
    AlgebraElt h2 = AlgebraElt(LaurentPoly::monomial(Rational(1, 10), -2)) *
                    ((one + z) * AlgebraElt::H2() - AlgebraElt::H1());
    CHECK(hypergeom_HK(2) == h2);

    for (long K = 0; K <= 20; ++K) {
        CAPTURE(K);
        CHECK(series_expand(hypergeom_HK(K), 16) == direct_HK(K, 16));
        // Gauss: K! * 2 * 4^(K+1) (K+1)! / ((2K+2)! pi)
        Integer num = 2, den = 1;
        for (long i = 1; i <= K; ++i) num *= i;
        for (long i = 1; i <= K + 1; ++i) num *= i * 4;
        for (long i = 1; i <= 2 * K + 2; ++i) den *= i;
        CHECK(eval_quarter(hypergeom_HK(K)) == PiPoly::inv_pi(Rational(num) / den));
    }
    // contiguity on the independent series: (k+1/2)(k+5/2)/(k+2) z H_{k+2} = (k+1)((1+z) H_{k+1} - H_k)
    auto zs = series_expand(z, 24);
    for (long k = 0; k + 2 <= 20; ++k) {
        auto a = direct_HK(k, 24), b = direct_HK(k + 1, 24), c = direct_HK(k + 2, 24);
        TruncatedSeries lhs = (zs * c).scaled(Rational(2 * k + 1, 2) * Rational(2 * k + 5, 2) / (k + 2));
        TruncatedSeries rhs = b + zs * b;
        rhs -= a;
        CHECK(lhs == rhs.scaled(k + 1));
    }
}

TEST_CASE("special values") {
    CHECK(catalan_gf() == parse_algebra("(1 - s)/(2*t)"));
    CHECK(series_expand(catalan_gf(), 4).str() == "1 + t + 2*t^2 + 5*t^3 + 14*t^4 + O(t^5)");
    CHECK(eval_quarter(catalan_gf()) == PiPoly(2));
    CHECK(eval_quarter(AlgebraElt::H1()) == PiPoly::inv_pi(4));
    CHECK(eval_quarter(AlgebraElt::H2()) == PiPoly::inv_pi(Rational(8, 3)));
    CHECK(eval_quarter(AlgebraElt::s()).is_zero());
    PiPoly v = eval_quarter(parse_algebra("(H1-1)/(4*t^2)"));
    CHECK(v.pretty() == "16/pi - 4");
    CHECK(v.canonical() == "-4 + 16*pi^-1");
    CHECK(v.decimal(6) == "1.092958");
}

TEST_CASE("catalan numbers") {
    long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n < 9; ++n) CHECK(catalan(n) == expect[n]);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}
