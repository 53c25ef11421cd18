#include "catsum/series.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

namespace catsum {

TruncatedSeries TruncatedSeries::truncated(int order) const {
    std::vector<Rational> c(order + 1);
    for (int i = 0; i <= order && i <= this->order(); ++i) c[i] = c_[i];
    return TruncatedSeries(c);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() > order()) c_.resize(o.c_.size());
    for (int i = 0; i <= o.order(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order() > order()) c_.resize(o.c_.size());
    for (int i = 0; i <= o.order(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& x) const {
    TruncatedSeries r(*this);
    for (auto& c : r.c_) c *= x;
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        int j = i + k;
        if (j < 0) {
            if (c_[i] != 0) throw NegativePowerResidue("nonzero coefficient shifted below t^0");
            continue;
        }
        if (j <= order()) r.c_[j] = c_[i];
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncatedSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        const Rational& c = c_[n];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (n == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (n > 1) os << "^" << n;
        }
    }
    if (first) os << "0";
    os << " + O(t^" << order() + 1 << ")";
    return os.str();
}

nlohmann::json TruncatedSeries::to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (auto& c : c_) a.push_back(c.get_str());
    return a;
}

TruncatedSeries generator_series(Generator which, int N) {
    TruncatedSeries r(N);
    switch (which) {
    case Generator::H1:
        r[0] = 1;
        for (int n = 1; 2 * n <= N; ++n) r[2 * n] = 4 * Integer(catalan(n - 1) * catalan(n - 1));
        break;
    case Generator::H2:
        r[0] = 1;
        for (int n = 1; 2 * n <= N; ++n) r[2 * n] = -2 * Integer(catalan(n - 1) * catalan(n));
        break;
    case Generator::C:
        for (int n = 0; n <= N; ++n) r[n] = catalan(n);
        break;
    case Generator::S:
        r[0] = 1;
        for (int n = 0; n + 1 <= N; ++n) r[n + 1] = -2 * catalan(n);
        break;
    }
    return r;
}

TruncatedSeries series_expand(const AlgebraElt& x, int N) {
    long shift = 0;
    for (auto& [m, p] : x.terms()) shift = std::max(shift, -p.min_exp());
    int W = N + (int)shift;
    TruncatedSeries h1 = generator_series(Generator::H1, W);
    TruncatedSeries h2 = generator_series(Generator::H2, W);
    TruncatedSeries s = generator_series(Generator::S, W);
    auto power = [&](const TruncatedSeries& g, int e) {
        TruncatedSeries r(W);
        r[0] = 1;
        for (int i = 0; i < e; ++i) r = r * g;
        return r;
    };
    // acc holds coefficients of t^(n - shift)
    TruncatedSeries acc(W);
    for (auto& [m, p] : x.terms()) {
        TruncatedSeries g = power(h1, m.a) * power(h2, m.b) * power(s, m.c);
        for (auto& [e, c] : p.terms()) {
            int off = (int)(e + shift);
            for (int i = 0; i + off <= W; ++i) acc[i + off] += c * g[i];
        }
    }
    for (int i = 0; i < shift; ++i)
        if (acc[i] != 0)
            throw NegativePowerResidue("coefficient of t^" + std::to_string(i - shift) + " does not cancel");
    TruncatedSeries r(N);
    for (int n = 0; n <= N; ++n) r[n] = acc[n + shift];
    return r;
}

std::uint64_t oracle_budget_from_env() {
    if (const char* e = std::getenv("CATSUM_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return default_oracle_budget;
}

namespace {

std::vector<Integer> catalan_table(int N) {
    std::vector<Integer> c(N + 1);
    for (int n = 0; n <= N; ++n) c[n] = catalan(n);
    return c;
}

struct Budget {
    std::uint64_t left;
    void tick() {
        if (left-- == 0) throw BudgetExceeded("oracle enumeration budget exceeded");
    }
};

}  // namespace

TruncatedSeries brute_force_decorated(const DecoratedTree& t, int N, std::uint64_t budget) {
    const int n = t.size();
    std::vector<long> kappa(n, 0);
    for (int v = n - 1; v >= 0; --v) {
        kappa[v] += t.dec(v).K;
        if (v > 0) kappa[t.parent(v)] += kappa[v];
    }
    // post-order: each vertex is visited after its whole subtree
    std::vector<int> post;
    std::function<void(int)> rec = [&](int v) {
        for (int c : t.children(v)) rec(c);
        post.push_back(v);
    };
    rec(0);
    auto cat = catalan_table(N);
    std::vector<Integer> acc(N + 1);
    std::vector<long> D(n, 0);  // running signed sum over finished subtree part
    Budget b{budget};

    auto holds = [&](int v, long d) {
        long k = kappa[v];
        switch (t.dec(v).rel) {
        case Rel::Eq: return d == k;
        case Rel::Le: return d <= k;
        case Rel::Ge: return d >= k;
        case Rel::None: return true;
        }
        return true;
    };

    std::function<void(int, int, Integer)> go = [&](int i, int used, Integer w) {
        b.tick();
        if (i == (int)post.size()) {
            acc[used] += w;
            return;
        }
        int v = post[i];
        long sub = 0;
        for (int c : t.children(v)) sub += D[c];
        Color col = t.dec(v).color;
        if (col == Color::Gray) {
            D[v] = sub;
            if (holds(v, D[v])) go(i + 1, used, w);
            return;
        }
        Rel rel = t.dec(v).rel;
        for (int x = 0; used + x <= N; ++x) {
            D[v] = sub + (col == Color::White ? x : -x);
            if (holds(v, D[v])) go(i + 1, used + x, w * cat[x]);
            else if (col == Color::White ? (rel == Rel::Le || (rel == Rel::Eq && D[v] > kappa[v]))
                                         : (rel == Rel::Ge || (rel == Rel::Eq && D[v] < kappa[v])))
                break;
        }
    };
    go(0, 0, Integer(1));
    TruncatedSeries r(N);
    for (int k = 0; k <= N; ++k) r[k] = acc[k];
    return r;
}

TruncatedSeries brute_force_edge(const PlainTree& t, int N, std::uint64_t budget) {
    const int n = t.size();
    // edges: (v, parent v) for v >= 1, plus the half-edge on the root
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, t.parent[v]});
    if (t.halfedge) edges.push_back({0, -1});
    auto cat = catalan_table(N);
    std::vector<long> X(n, 0);
    std::vector<Integer> acc(N + 1);
    Budget b{budget};
    std::function<void(size_t, int)> go = [&](size_t i, int used) {
        b.tick();
        if (i == edges.size()) {
            Integer w = 1;
            for (int v = 0; v < n; ++v) w *= cat[X[v]];
            acc[used] += w;
            return;
        }
        auto [u, v] = edges[i];
        int cost = v < 0 ? 1 : 2;
        for (int x = 0; used + cost * x <= N; ++x) {
            X[u] += x;
            if (v >= 0) X[v] += x;
            go(i + 1, used + cost * x);
            X[u] -= x;
            if (v >= 0) X[v] -= x;
        }
    };
    go(0, 0);
    TruncatedSeries r(N);
    for (int k = 0; k <= N; ++k) r[k] = acc[k];
    return r;
}

}  // namespace catsum
