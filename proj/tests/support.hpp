#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "catsum/engine.hpp"
#include "catsum/series.hpp"

namespace catsum::testing {

// Random decorated tree: n vertices, at most max_nongray colored ones,
// every relation symbol, K uniform in [kmin, kmax].
inline DecoratedTree random_decorated(std::mt19937& rng, int max_vertices, int max_nongray, long kmin, long kmax) {
    int n = 1 + (int)(rng() % max_vertices);
    std::vector<int> par(n);
    std::vector<Decoration> dec(n);
    int nongray = 0;
    for (int v = 0; v < n; ++v) {
        par[v] = v == 0 ? -1 : (int)(rng() % v);
        int c = (int)(rng() % 3) - 1;
        if (c != 0 && nongray >= max_nongray) c = 0;
        nongray += c != 0;
        long K = kmin + (long)(rng() % (kmax - kmin + 1));
        dec[v] = {Color(c), Rel(rng() % 4), K};
    }
    return DecoratedTree(par, dec);
}

// Series of sum_i c_i * prod_j S(T_ij), every S taken from the brute-force oracle.
inline TruncatedSeries oracle_series(const SumExpr& e, int N) {
    long lift = 0;
    for (auto& term : e.terms)
        for (auto& [m, p] : term.coeff.terms())
            if (!p.is_zero()) lift = std::max(lift, -p.min_exp());
    const int M = N + (int)lift;
    TruncatedSeries acc(M);
    for (auto& term : e.terms) {
        if (term.coeff.is_zero()) continue;
        TruncatedSeries prod = series_expand(term.coeff.shifted(lift), M);
        for (auto& f : term.factors) prod = prod * brute_force_decorated(f, M);
        acc += prod;
    }
    return acc.shifted(-lift).truncated(N);
}

// Relabel a decorated tree by a random preorder-compatible permutation of siblings.
inline DecoratedTree shuffle_siblings(const DecoratedTree& t, std::mt19937& rng) {
    std::vector<int> order;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        auto ch = t.children(v);
        std::shuffle(ch.begin(), ch.end(), rng);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    std::vector<int> pos(t.size());
    for (int i = 0; i < t.size(); ++i) pos[order[i]] = i;
    std::vector<int> par(t.size());
    std::vector<Decoration> dec(t.size());
    for (int i = 0; i < t.size(); ++i) {
        int v = order[i];
        par[i] = t.parent(v) < 0 ? -1 : pos[t.parent(v)];
        dec[i] = t.dec(v);
    }
    return DecoratedTree(par, dec);
}

// Brute-force rooted isomorphism with decorations, for small trees.
inline bool isomorphic(const DecoratedTree& a, const DecoratedTree& b) {
    const int n = a.size();
    if (n != b.size()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[0] != 0) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            ok = a.dec(v) == b.dec(perm[v]);
            if (ok && v > 0) ok = perm[a.parent(v)] == b.parent(perm[v]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// The long stars whose degree the theory shows to be maximal.
inline DecoratedTree long_star(Color center, Decoration cdec, int d) {
    std::vector<int> par{-1};
    std::vector<Decoration> dec{cdec};
    dec[0].color = center;
    for (int i = 0; i < d; ++i) {
        par.push_back(0);
        dec.push_back({Color::White, Rel::Ge, 0});
        par.push_back((int)par.size() - 1);
        dec.push_back({Color::Black, Rel::None, 0});
    }
    return DecoratedTree(par, dec);
}

}  // namespace catsum::testing
