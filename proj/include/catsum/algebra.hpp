#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include <json.hpp>

namespace catsum {

using Rational = mpq_class;
using Integer = mpz_class;

Integer catalan(long n);
Integer binomial(long n, long k);
std::string to_string(const Rational& q);

// Sparse Laurent polynomial in t over Q.
class LaurentPoly {
public:
    using Terms = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    static LaurentPoly monomial(const Rational& c, long e);
    static LaurentPoly t(long e = 1) { return monomial(1, e); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long min_exp() const { return terms_.begin()->first; }
    long max_exp() const { return terms_.rbegin()->first; }
    Rational coeff(long e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    LaurentPoly shifted(long k) const;
    LaurentPoly scaled(const Rational& c) const;
    Rational eval(const Rational& x) const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    std::string str(bool sqrt_t = false) const;

private:
    void add_term(long e, const Rational& c);
    Terms terms_;
};

struct Mono {
    int a = 0;  // power of H1
    int b = 0;  // power of H2
    int c = 0;  // power of s, 0 or 1
    auto operator<=>(const Mono&) const = default;
    int degree() const { return 2 * a + 2 * b + c; }
};

// Element of Q[t,1/t][H1,H2,s] with s^2 = 1 - 4t.
class AlgebraElt {
public:
    using Terms = std::map<Mono, LaurentPoly>;

    AlgebraElt() = default;
    AlgebraElt(const LaurentPoly& p);
    AlgebraElt(const Rational& c) : AlgebraElt(LaurentPoly(c)) {}
    AlgebraElt(long c) : AlgebraElt(LaurentPoly(c)) {}
    static AlgebraElt H1();
    static AlgebraElt H2();
    static AlgebraElt s();
    static AlgebraElt term(Mono m, const LaurentPoly& p);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<int> degree() const;
    bool has_s() const;

    AlgebraElt& operator+=(const AlgebraElt& o);
    AlgebraElt& operator-=(const AlgebraElt& o);
    AlgebraElt& operator*=(const AlgebraElt& o);
    AlgebraElt operator-() const;
    AlgebraElt shifted(long k) const;
    AlgebraElt scaled(const Rational& c) const;
    AlgebraElt pow(unsigned n) const;

    friend AlgebraElt operator+(AlgebraElt a, const AlgebraElt& b) { return a += b; }
    friend AlgebraElt operator-(AlgebraElt a, const AlgebraElt& b) { return a -= b; }
    friend AlgebraElt operator*(const AlgebraElt& a, const AlgebraElt& b);
    friend bool operator==(const AlgebraElt& a, const AlgebraElt& b) { return a.terms_ == b.terms_; }

    // sqrt_t prints in the variable u = sqrt(t); only valid when no odd power of t meets s
    std::string str(bool sqrt_t = false) const;
    nlohmann::json to_json() const;

private:
    void add_term(Mono m, const LaurentPoly& p);
    Terms terms_;
};

// Polynomial in 1/pi with rational coefficients.
class PiPoly {
public:
    using Terms = std::map<int, Rational>;

    PiPoly() = default;
    PiPoly(const Rational& c);
    static PiPoly inv_pi(const Rational& c, int d = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<int> degree() const;
    Rational coeff(int d) const;

    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o);
    PiPoly operator-() const;
    PiPoly scaled(const Rational& c) const;
    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.terms_ == b.terms_; }

    std::string canonical() const;  // c0 + c1*pi^-1 + ...
    std::string pretty() const;      // 16/pi - 4
    std::string decimal(int digits = 12) const;
    double to_double() const;
    nlohmann::json to_json() const;

private:
    void add_term(int d, const Rational& c);
    Terms terms_;
};

AlgebraElt hypergeom_HK(long K);
AlgebraElt catalan_gf();
PiPoly eval_quarter(const AlgebraElt& x);

// pi to 64 digits, only for display
const Rational& pi_approx();

}  // namespace catsum
