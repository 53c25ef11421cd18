#include "catsum/algebra.hpp"

#include <sstream>
#include <vector>

namespace catsum {

Integer catalan(long n) {
    if (n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r / (n + 1);
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

Rational LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& x) const {
    if (x == 0) return {};
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, c * x);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [e1, c1] : a.terms_)
        for (auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

static Rational rpow(const Rational& x, long e) {
    Rational r = 1;
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto& [e, c] : terms_) r += c * rpow(x, e);
    return r;
}

namespace {

std::string t_power(long e, bool sqrt_t) {
    if (sqrt_t) e /= 2;
    if (e == 0) return "";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

// one signed monomial "coef*factors", sign handled by caller
std::string join_factor(const Integer& absc, const std::string& factors) {
    if (factors.empty()) return absc.get_str();
    if (absc == 1) return factors;
    return absc.get_str() + "*" + factors;
}

std::string mono_factors(const Mono& m) {
    std::string s;
    auto put = [&](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    if (m.a == 1) put("H1");
    else if (m.a > 1) put("H1^" + std::to_string(m.a));
    if (m.b == 1) put("H2");
    else if (m.b > 1) put("H2^" + std::to_string(m.b));
    if (m.c) put("s");
    return s;
}

struct FlatTerm {
    Mono m;
    long e;
    Rational c;
};

// Renders sum of flat terms as [-][p*](N)/(q*t^k) with N having coprime integer coefficients.
std::string render_flat(std::vector<FlatTerm> flat, bool sqrt_t) {
    if (flat.empty()) return "0";
    Integer den = 1;
    long emin = flat.front().e;
    for (auto& f : flat) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f.c.get_den_mpz_t());
        emin = std::min(emin, f.e);
    }
    emin = std::min(emin, 0L);
    if (sqrt_t && (emin % 2 != 0)) emin -= 1;
    std::vector<Integer> nums;
    Integer g = 0;
    for (auto& f : flat) {
        Integer n = f.c.get_num() * (den / f.c.get_den());
        nums.push_back(n);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    bool neg = nums.front() < 0;
    std::ostringstream body;
    for (size_t i = 0; i < flat.size(); ++i) {
        Integer n = nums[i] / g;
        if (neg) n = -n;
        std::string f = mono_factors(flat[i].m);
        std::string tp = t_power(flat[i].e - emin, sqrt_t);
        if (!tp.empty()) f = f.empty() ? tp : f + "*" + tp;
        Integer a = abs(n);
        if (i == 0) body << (n < 0 ? "-" : "") << join_factor(a, f);
        else body << (n < 0 ? " - " : " + ") << join_factor(a, f);
    }
    Rational outer(g, den);
    outer.canonicalize();
    std::string num = body.str();
    std::string tden = t_power(-emin, sqrt_t);
    std::string out;
    if (neg) out += "-";
    bool trivial_outer = (outer == 1 && emin == 0);
    if (trivial_outer) return out + (neg && flat.size() > 1 ? "(" + num + ")" : num);
    bool wrap = flat.size() > 1 || num.find('*') != std::string::npos;
    std::string core = wrap ? "(" + num + ")" : num;
    if (outer.get_num() != 1) core = outer.get_num().get_str() + "*" + core;
    std::string d;
    if (outer.get_den() != 1) d = outer.get_den().get_str();
    if (!tden.empty()) d = d.empty() ? tden : d + "*" + tden;
    if (d.empty()) return out + core;
    bool dwrap = d.find('*') != std::string::npos;
    return out + core + "/" + (dwrap ? "(" + d + ")" : d);
}

}  // namespace

std::string LaurentPoly::str(bool sqrt_t) const {
    std::vector<FlatTerm> flat;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) flat.push_back({Mono{}, it->first, it->second});
    return render_flat(flat, sqrt_t);
}

// ----------------------------------------------------------------- AlgebraElt

AlgebraElt::AlgebraElt(const LaurentPoly& p) {
    if (!p.is_zero()) terms_[Mono{}] = p;
}

AlgebraElt AlgebraElt::term(Mono m, const LaurentPoly& p) {
    AlgebraElt r;
    r.add_term(m, p);
    return r;
}

AlgebraElt AlgebraElt::H1() { return term({1, 0, 0}, LaurentPoly(1)); }
AlgebraElt AlgebraElt::H2() { return term({0, 1, 0}, LaurentPoly(1)); }
AlgebraElt AlgebraElt::s() { return term({0, 0, 1}, LaurentPoly(1)); }

void AlgebraElt::add_term(Mono m, const LaurentPoly& p) {
    if (p.is_zero()) return;
    if (m.c >= 2) {
        // s^2 = 1 - 4t
        LaurentPoly q = p * (LaurentPoly(1) - LaurentPoly::monomial(4, 1));
        m.c -= 2;
        add_term(m, q);
        return;
    }
    auto [it, fresh] = terms_.try_emplace(m, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> AlgebraElt::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (auto& [m, p] : terms_) d = std::max(d, m.degree());
    return d;
}

bool AlgebraElt::has_s() const {
    for (auto& [m, p] : terms_)
        if (m.c) return true;
    return false;
}

AlgebraElt& AlgebraElt::operator+=(const AlgebraElt& o) {
    for (auto& [m, p] : o.terms_) add_term(m, p);
    return *this;
}

AlgebraElt& AlgebraElt::operator-=(const AlgebraElt& o) {
    for (auto& [m, p] : o.terms_) add_term(m, -p);
    return *this;
}

AlgebraElt& AlgebraElt::operator*=(const AlgebraElt& o) { return *this = *this * o; }

AlgebraElt AlgebraElt::operator-() const {
    AlgebraElt r;
    for (auto& [m, p] : terms_) r.terms_.emplace(m, -p);
    return r;
}

AlgebraElt AlgebraElt::shifted(long k) const {
    AlgebraElt r;
    for (auto& [m, p] : terms_) r.terms_.emplace(m, p.shifted(k));
    return r;
}

AlgebraElt AlgebraElt::scaled(const Rational& c) const {
    if (c == 0) return {};
    AlgebraElt r;
    for (auto& [m, p] : terms_) r.terms_.emplace(m, p.scaled(c));
    return r;
}

AlgebraElt operator*(const AlgebraElt& x, const AlgebraElt& y) {
    AlgebraElt r;
    for (auto& [m1, p1] : x.terms_)
        for (auto& [m2, p2] : y.terms_) r.add_term({m1.a + m2.a, m1.b + m2.b, m1.c + m2.c}, p1 * p2);
    return r;
}

AlgebraElt AlgebraElt::pow(unsigned n) const {
    AlgebraElt r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

std::string AlgebraElt::str(bool sqrt_t) const {
    std::vector<FlatTerm> flat;
    bool even = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        for (auto jt = it->second.terms().rbegin(); jt != it->second.terms().rend(); ++jt) {
            flat.push_back({it->first, jt->first, jt->second});
            if (jt->first % 2 != 0) even = false;
        }
    return render_flat(flat, sqrt_t && even);
}

nlohmann::json AlgebraElt::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (auto& [e, c] : it->second.terms()) coeffs[std::to_string(e)] = c.get_str();
        arr.push_back({{"H1", it->first.a}, {"H2", it->first.b}, {"s", it->first.c}, {"t", coeffs}});
    }
    return {{"terms", arr}, {"text", str()}};
}

// --------------------------------------------------------------------- PiPoly

PiPoly::PiPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

PiPoly PiPoly::inv_pi(const Rational& c, int d) {
    PiPoly p;
    if (c != 0) p.terms_[d] = c;
    return p;
}

std::optional<int> PiPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational PiPoly::coeff(int d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PiPoly::add_term(int d, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    for (auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
    for (auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

PiPoly PiPoly::operator-() const { return scaled(-1); }

PiPoly PiPoly::scaled(const Rational& x) const {
    PiPoly r;
    if (x == 0) return r;
    for (auto& [d, c] : terms_) r.terms_.emplace(d, c * x);
    return r;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    for (auto& [d1, c1] : a.terms_)
        for (auto& [d2, c2] : b.terms_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

std::string PiPoly::canonical() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (d > 0) os << "*pi^-" << d;
    }
    return os.str();
}

std::string PiPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int d = it->first;
        const Rational& c = it->second;
        bool neg = c < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        Integer p = abs(c.get_num());
        Integer q = c.get_den();
        if (d == 0) {
            os << p.get_str();
            if (q != 1) os << "/" << q.get_str();
            continue;
        }
        std::string pis = d == 1 ? "pi" : "pi^" + std::to_string(d);
        os << p.get_str() << "/";
        if (q == 1) os << pis;
        else os << "(" << q.get_str() << "*" << pis << ")";
    }
    return os.str();
}

const Rational& pi_approx() {
    static const Rational pi = [] {
        Rational r("31415926535897932384626433832795028841971693993751058209749445923/"
                   "10000000000000000000000000000000000000000000000000000000000000000");
        r.canonicalize();
        return r;
    }();
    return pi;
}

static Rational exact_value(const PiPoly& p) {
    Rational v = 0;
    Rational ip = Rational(1) / pi_approx();
    for (auto& [d, c] : p.terms()) v += c * rpow(ip, d);
    return v;
}

double PiPoly::to_double() const { return exact_value(*this).get_d(); }

std::string PiPoly::decimal(int digits) const {
    Rational v = exact_value(*this);
    bool neg = v < 0;
    if (neg) v = -v;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer n = v.get_num() * scale / v.get_den();
    std::string s = n.get_str();
    if ((int)s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

nlohmann::json PiPoly::to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (auto& [d, c] : terms_) coeffs[std::to_string(d)] = c.get_str();
    return {{"inv_pi_coeffs", coeffs}, {"text", pretty()}, {"decimal", decimal()}};
}

// ------------------------------------------------------------ special values

AlgebraElt hypergeom_HK(long K) {
    if (K < 0) throw std::invalid_argument("hypergeom_HK: negative K");
    AlgebraElt h0 = AlgebraElt::H1(), h1 = AlgebraElt::H2();
    if (K == 0) return h0;
    // z = 16 t^2
    const LaurentPoly z = LaurentPoly::monomial(16, 2);
    const LaurentPoly inv_z = LaurentPoly::monomial(Rational(1, 16), -2);
    for (long k = 0; k + 1 < K; ++k) {
        // (k+1/2)(k+5/2)/(k+2) z H_{k+2} = (k+1)(1+z) H_{k+1} - (k+1) H_k
        Rational lead = Rational(2 * k + 1, 2) * Rational(2 * k + 5, 2) / (k + 2);
        AlgebraElt rhs = AlgebraElt(LaurentPoly(1) + z) * h1 - h0;
        rhs = rhs.scaled(Rational(k + 1) / lead);
        AlgebraElt h2 = AlgebraElt(inv_z) * rhs;
        h0 = std::move(h1);
        h1 = std::move(h2);
    }
    return h1;
}

AlgebraElt catalan_gf() {
    // (1 - s)/(2t)
    return (AlgebraElt(1) - AlgebraElt::s()).shifted(-1).scaled(Rational(1, 2));
}

PiPoly eval_quarter(const AlgebraElt& x) {
    PiPoly r;
    const Rational quarter(1, 4);
    for (auto& [m, p] : x.terms()) {
        if (m.c) continue;
        Rational c = p.eval(quarter);
        // H1 -> 4/pi, H2 -> 8/(3 pi)
        c *= rpow(Rational(4), m.a) * rpow(Rational(8, 3), m.b);
        r += PiPoly::inv_pi(c, m.a + m.b);
    }
    return r;
}

}  // namespace catsum
