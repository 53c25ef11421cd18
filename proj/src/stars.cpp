#include "catsum/stars.hpp"

#include <stdexcept>

namespace catsum {

PlainTree star_tree(long s) {
    PlainTree t;
    t.parent.assign(s + 1, 0);
    t.parent[0] = -1;
    return t;
}

PiPoly star_eval(long s, Engine& engine) {
    if (s < 0) throw std::invalid_argument("star_eval: s < 0");
    if (s < 3) return eval_quarter(engine.reduce(star_tree(s)));
    Rational sum = 0;
    const long m = s - 3;
    for (long k = 0; k <= m; ++k) sum += Rational(binomial(m, k)) / ((2 * k + 1) * (2 * k + 3) * (2 * k + 5));
    return PiPoly::inv_pi(sum * 64);
}

PiPoly star_eval(long s) {
    Engine e;
    return star_eval(s, e);
}

std::pair<PiPoly, PiPoly> star_recurrence_residual(long s) {
    if (s < 1) throw std::invalid_argument("star_recurrence_residual: s < 1");
    Engine e;
    PiPoly a0 = star_eval(s, e), a1 = star_eval(s + 1, e), a2 = star_eval(s + 2, e);
    PiPoly hom = a2.scaled(2 * s + 3) - a1.scaled(2 * (3 * s - 2)) + a0.scaled(4 * (s - 2));
    Integer pow2 = 1;
    pow2 <<= s;
    PiPoly inhom = a1.scaled(Rational((2 * s + 1) * (s * s - s + 1))) - a0.scaled(Rational(2 * (s - 2) * (s * s + s + 1))) -
                   PiPoly::inv_pi(Rational(16 * pow2));
    return {hom, inhom};
}

namespace {

Rational bc_prefactor(long s) {
    Integer p4 = 1;
    p4 <<= 2 * s;
    return Rational(4 * p4 * (s * s + 5 * s + 7)) / (Integer((s + 1) * (s + 2) * (s + 3)) * binomial(2 * s + 5, s + 2));
}

Rational bc_sum(long s, long c) {
    Rational sum = 0;
    for (long k = 0; k <= s; ++k) {
        Integer p2 = 1;
        p2 <<= k;
        sum += Rational((k + 1) * (4 * k + c) * binomial(2 * k + 2, k + 1)) / p2;
    }
    return sum;
}

}  // namespace

Rational star_B(long s) {
    Integer p2 = 1;
    p2 <<= s + 1;
    return Rational((5 * s + 11) * p2) / (2 * s + 5) + bc_prefactor(s) * bc_sum(s, 9);
}

Rational star_C(long s) {
    Integer p2 = 1;
    p2 <<= s;
    return Rational(3 * (s - 1) * p2) / (2 * s + 5) + bc_prefactor(s) * bc_sum(s, 13) * Rational(3, 2);
}

PiPoly star_eval_crosscheck_BC(long s) {
    return PiPoly::inv_pi(star_B(s) * 4 - star_C(s) * Rational(8, 3));
}

Rational star_3f2_partial(long s, long terms) {
    if (s < 1 || terms < 1) throw std::invalid_argument("star_3f2_partial: need s >= 1, terms >= 1");
    // a_n = Cat_n [t^n]C^s is an integer; accumulate sum a_n 16^(N-1-n) by Horner
    Integer a = 1, acc = 0;
    for (long n = 0; n < terms; ++n) {
        acc = acc * 16 + a;
        a *= 2 * (2 * n + 1) * (2 * n + s + 1) * (2 * n + s);
        Integer den = Integer(n + 2) * (n + 1) * (n + s + 1);
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
    }
    Integer d = 1;
    d <<= 4 * (terms - 1);
    Rational r(acc, d);
    r.canonicalize();
    return r;
}

}  // namespace catsum
