#include "catsum/expr.hpp"

#include <cctype>

#include "catsum/tree.hpp"

namespace catsum {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    bool sqrt_t;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + s + "'");
    }
    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Integer number() {
        skip();
        size_t b = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (b == pos) fail("expected a number");
        return Integer(s.substr(b, pos - b));
    }

    AlgebraElt expr() {
        AlgebraElt r;
        bool neg = eat('-');
        if (!neg) eat('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    AlgebraElt term() {
        AlgebraElt r = power();
        for (;;) {
            if (eat('*')) r *= power();
            else if (eat('/')) r = divide(r, power());
            else return r;
        }
    }
    AlgebraElt divide(const AlgebraElt& a, const AlgebraElt& b) {
        const auto& bt = b.terms();
        if (bt.size() != 1 || bt.begin()->first != Mono{} || bt.begin()->second.terms().size() != 1)
            fail("division only by c*t^k");
        auto [e, c] = *bt.begin()->second.terms().begin();
        return a.shifted(-e).scaled(Rational(1) / c);
    }
    AlgebraElt power() {
        AlgebraElt b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long n = number().get_si();
            if (neg) {
                const auto& bt = b.terms();
                if (bt.size() != 1 || bt.begin()->first != Mono{} || bt.begin()->second.terms().size() != 1)
                    fail("negative power of a non-monomial");
                auto [e, c] = *bt.begin()->second.terms().begin();
                Rational ci = 1;
                for (long k = 0; k < n; ++k) ci /= c;
                return AlgebraElt(LaurentPoly::monomial(ci, -e * n));
            }
            return b.pow((unsigned)n);
        }
        return b;
    }
    AlgebraElt atom() {
        skip();
        if (eat('(')) {
            AlgebraElt r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) return AlgebraElt(Rational(number()));
        size_t b = pos;
        while (pos < s.size() && std::isalnum((unsigned char)s[pos])) ++pos;
        std::string id = s.substr(b, pos - b);
        if (id == "H1" || id == "h1") return AlgebraElt::H1();
        if (id == "H2" || id == "h2") return AlgebraElt::H2();
        if (id == "s") return AlgebraElt::s();
        if (id == "t") return AlgebraElt(LaurentPoly::t(sqrt_t ? 2 : 1));
        fail("unknown symbol '" + id + "'");
    }
};

}  // namespace

AlgebraElt parse_algebra(const std::string& text, bool sqrt_t) {
    Parser p{text, 0, sqrt_t};
    AlgebraElt r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

PiPoly parse_pipoly(const std::string& text) {
    // terms: [sign] p[/q] | [sign] p/pi^d | p/(q*pi^d) | p*pi^-d
    PiPoly r;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    auto fail = [&](const std::string& w) { throw ParseError(w + " at position " + std::to_string(pos)); };
    auto num = [&] {
        skip();
        size_t b = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (b == pos) fail("expected a number");
        return Integer(text.substr(b, pos - b));
    };
    auto lit = [&](const char* w) {
        skip();
        size_t n = std::char_traits<char>::length(w);
        if (text.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    };
    auto pi_power = [&]() -> int {
        if (!lit("pi")) return -1;
        if (lit("^")) return (int)num().get_si();
        return 1;
    };
    skip();
    if (lit("0")) {
        skip();
        if (pos == text.size()) return r;
        fail("unexpected input after 0");
    }
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        int sign = 1;
        if (lit("-")) sign = -1;
        else if (lit("+")) {
            if (lit("-")) sign = -1;  // canonical form writes "+ -c"
        } else if (!first) fail("expected '+' or '-'");
        first = false;
        Integer p = num();
        Integer q = 1;
        int d = 0;
        if (lit("*")) {
            if (!lit("pi^-")) fail("expected pi^-d");
            d = (int)num().get_si();
        } else if (lit("/")) {
            if (lit("(")) {
                q = num();
                if (!lit("*")) fail("expected '*'");
                d = pi_power();
                if (d < 0 || !lit(")")) fail("expected pi power");
            } else {
                int dd = pi_power();
                if (dd >= 0) d = dd;
                else q = num();
            }
        }
        if (d == 0 && lit("*")) {
            if (!lit("pi^-")) fail("expected pi^-d");
            d = (int)num().get_si();
        }
        Rational c(sign * p, q);
        c.canonicalize();
        r += PiPoly::inv_pi(c, d);
    }
    return r;
}

}  // namespace catsum
