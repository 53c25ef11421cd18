#include "catsum/engine.hpp"

#include <ostream>

namespace catsum {

namespace {

const Decoration kEmpty0{Color::Gray, Rel::None, 0};

LaurentPoly catalan_partial(long lo, long hi) {
    LaurentPoly p;
    for (long l = std::max(lo, 0L); l <= hi; ++l) p += LaurentPoly::monomial(Rational(catalan(l)), l);
    return p;
}

AlgebraElt s_eq(long M) {
    if (M < 0) M = -M;
    // 1/alpha_M = -(M+1) Cat_M t^(M-2) / (4(2M-1))
    Rational c = -Rational(Integer((M + 1) * catalan(M))) / (4 * (2 * M - 1));
    return (hypergeom_HK(M) - AlgebraElt(1)) * AlgebraElt(LaurentPoly::monomial(c, M - 2));
}

const AlgebraElt& s_eq0() {
    static const AlgebraElt v = s_eq(0);
    return v;
}

bool indicator(Rel rel, long lhs, long rhs) {
    switch (rel) {
    case Rel::Eq: return lhs == rhs;
    case Rel::Le: return lhs <= rhs;
    case Rel::Ge: return lhs >= rhs;
    case Rel::None: return true;
    }
    return true;
}

DecoratedTree subtree(const DecoratedTree& t, int v) {
    TreeEdit e(t);
    std::vector<bool> keep(t.size(), false);
    keep[v] = true;
    for (int u = v + 1; u < t.size(); ++u)
        if (keep[t.parent(u)]) keep[u] = true;
    for (int u = 0; u < t.size(); ++u) e.alive[u] = keep[u];
    e.parent[v] = -1;
    return e.compact();
}

DecoratedTree without_subtree(const DecoratedTree& t, int v) {
    TreeEdit e(t);
    e.remove_subtree(v);
    return e.compact();
}

int sign_of(Color c) { return (int)c; }

}  // namespace

int SumExpr::handle_count() const {
    int n = 0;
    for (auto& t : terms) n += (int)t.factors.size();
    return n;
}

// ------------------------------------------------------------------ base cases

AlgebraElt base_sum(Rel rel, long K) {
    switch (rel) {
    case Rel::None: {
        // C(t)^2 = (2 - 4t - 2s)/(4t^2)
        AlgebraElt num = AlgebraElt(LaurentPoly(2) - LaurentPoly::monomial(4, 1)) - AlgebraElt::s().scaled(2);
        return num.shifted(-2).scaled(Rational(1, 4));
    }
    case Rel::Eq: return s_eq(K);
    case Rel::Ge: {
        AlgebraElt r = (base_sum(Rel::None, 0) + s_eq(0)).scaled(Rational(1, 2));
        if (K > 0)
            for (long q = 0; q < K; ++q) r -= s_eq(q);
        else
            for (long q = 1; q <= -K; ++q) r += s_eq(q);
        return r;
    }
    case Rel::Le: return base_sum(Rel::Ge, -K);
    }
    return {};
}

AlgebraElt height_zero_sum(const Decoration& d) {
    const long K = d.K;
    if (d.color == Color::Gray) return AlgebraElt(indicator(d.rel, 0, K) ? 1 : 0);
    const AlgebraElt C = catalan_gf();
    if (d.color == Color::White) {
        switch (d.rel) {
        case Rel::None: return C;
        case Rel::Eq: return K >= 0 ? AlgebraElt(LaurentPoly::monomial(Rational(catalan(K)), K)) : AlgebraElt();
        case Rel::Ge: return C - AlgebraElt(catalan_partial(0, K - 1));
        case Rel::Le: return AlgebraElt(catalan_partial(0, K));
        }
    }
    switch (d.rel) {
    case Rel::None: return C;
    case Rel::Eq: return K <= 0 ? AlgebraElt(LaurentPoly::monomial(Rational(catalan(-K)), -K)) : AlgebraElt();
    case Rel::Ge: return K <= 0 ? AlgebraElt(catalan_partial(0, -K)) : AlgebraElt();
    case Rel::Le: return C - AlgebraElt(catalan_partial(0, -K - 1));
    }
    return {};
}

// ------------------------------------------------------------ good-tree checks

static int violations(const DecoratedTree& t) {
    int n = 0;
    for (int v = 0; v < t.size(); ++v) {
        const Decoration& d = t.dec(v);
        if (v > 0 && d.rel == Rel::Eq) ++n;
        if ((d.rel == Rel::Le || d.rel == Rel::Ge) && d.K != 0) ++n;
        if (v > 0 && t.is_leaf(v)) {
            if (d.color == Color::Gray || d.rel != Rel::None || d.K != 0) ++n;
            const Decoration& p = t.dec(t.parent(v));
            if (p.color == Color::Gray || p.color == d.color) ++n;
            for (int s : t.children(t.parent(v)))
                if (s < v && t.is_leaf(s) && t.dec(s).color == d.color) ++n;
        }
    }
    return n;
}

bool is_good(const DecoratedTree& t) { return violations(t) == 0; }

Measure termination_measure(const DecoratedTree& t) {
    Integer w = 0;
    for (int v = 0; v < t.size(); ++v) {
        const Decoration& d = t.dec(v);
        if (d.rel == Rel::Eq || d.K == 0) continue;
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, t.depth(v));
        w += pw * (d.K < 0 ? -d.K : d.K);
    }
    return {t.path_length(), w, violations(t), t.size()};
}

// ------------------------------------------------------------- generic rules

SumExpr rewrite_once(const DecoratedTree& t) {
    const int n = t.size();
    SumExpr out;
    auto done = [&](const char* name, int v) {
        out.rule = name;
        out.vertex = v;
        return out;
    };

    // nonroot equality: split off the fringe subtree
    for (int v = 1; v < n; ++v)
        if (t.dec(v).rel == Rel::Eq) {
            out.add(AlgebraElt(1), {without_subtree(t, v), subtree(t, v)});
            return done("equality_split", v);
        }

    // one K-shift step toward zero
    for (int v = 0; v < n; ++v) {
        const Decoration d = t.dec(v);
        if ((d.rel != Rel::Le && d.rel != Rel::Ge) || d.K == 0) continue;
        const int p = t.parent(v);
        auto make = [&](Rel rel, long K, long dp) {
            TreeEdit e(t);
            e.dec[v].rel = rel;
            e.dec[v].K = K;
            if (p >= 0) e.dec[p].K += dp;
            return e.compact();
        };
        const long K = d.K;
        if (d.rel == Rel::Ge && K > 0) {
            out.add(AlgebraElt(1), {make(Rel::Ge, K - 1, 1)});
            out.add(AlgebraElt(-1), {make(Rel::Eq, K - 1, 1)});
        } else if (d.rel == Rel::Ge) {
            out.add(AlgebraElt(1), {make(Rel::Ge, K + 1, -1)});
            out.add(AlgebraElt(1), {make(Rel::Eq, K, 0)});
        } else if (K > 0) {
            out.add(AlgebraElt(1), {make(Rel::Le, K - 1, 1)});
            out.add(AlgebraElt(1), {make(Rel::Eq, K, 0)});
        } else {
            out.add(AlgebraElt(1), {make(Rel::Le, K + 1, -1)});
            out.add(AlgebraElt(-1), {make(Rel::Eq, K + 1, -1)});
        }
        return done("k_shift", v);
    }

    // gray leaf
    for (int v = 1; v < n; ++v)
        if (t.is_leaf(v) && t.dec(v).color == Color::Gray) {
            const Decoration d = t.dec(v);
            if (indicator(d.rel, 0, d.K)) {
                TreeEdit e(t);
                e.dec[t.parent(v)].K += d.K;
                e.remove_subtree(v);
                out.add(AlgebraElt(1), {e.compact()});
            }
            return done("gray_leaf", v);
        }

    // leaf with an inequality and K = 0
    for (int v = 1; v < n; ++v) {
        const Decoration d = t.dec(v);
        if (!t.is_leaf(v) || (d.rel != Rel::Le && d.rel != Rel::Ge)) continue;
        TreeEdit e(t);
        bool forced_zero = (d.color == Color::White) == (d.rel == Rel::Le);
        if (forced_zero) e.remove_subtree(v);
        else e.dec[v].rel = Rel::None;
        out.add(AlgebraElt(1), {e.compact()});
        return done("leaf_inequality", v);
    }

    // nonroot empty-relation vertex hands its K to the parent
    for (int v = 1; v < n; ++v) {
        const Decoration d = t.dec(v);
        if (d.rel != Rel::None || d.K == 0) continue;
        TreeEdit e(t);
        e.dec[t.parent(v)].K += d.K;
        e.dec[v].K = 0;
        out.add(AlgebraElt(1), {e.compact()});
        return done("empty_shift", v);
    }

    // twin leaves of the same color
    for (int p = 0; p < n; ++p) {
        const auto& ch = t.children(p);
        for (size_t a = 0; a < ch.size(); ++a)
            for (size_t b = a + 1; b < ch.size(); ++b) {
                int u = ch[a], w = ch[b];
                if (!t.is_leaf(u) || !t.is_leaf(w) || t.dec(u).color != t.dec(w).color) continue;
                const int sg = sign_of(t.dec(u).color);
                TreeEdit e1(t);
                e1.remove_subtree(w);
                e1.dec[u].K = sg;
                TreeEdit e2(t);
                e2.remove_subtree(u);
                e2.remove_subtree(w);
                e2.dec[p].K += sg;
                AlgebraElt inv_t(LaurentPoly::t(-1));
                out.add(inv_t, {e1.compact()});
                out.add(-inv_t, {e2.compact()});
                return done("twin_leaves", u);
            }
    }

    // leaf with a parent of its own color
    for (int v = 1; v < n; ++v) {
        int p = t.parent(v);
        if (!t.is_leaf(v) || t.dec(p).color != t.dec(v).color) continue;
        const int sg = sign_of(t.dec(v).color);
        TreeEdit e1(t);
        e1.remove_subtree(v);
        e1.dec[p].K += sg;
        TreeEdit e2 = e1;
        e2.dec[p].color = Color::Gray;
        AlgebraElt inv_t(LaurentPoly::t(-1));
        out.add(inv_t, {e1.compact()});
        out.add(-inv_t, {e2.compact()});
        return done("consecutive_leaf", v);
    }

    // leaf with a gray parent
    for (int v = 1; v < n; ++v) {
        int p = t.parent(v);
        if (!t.is_leaf(v) || t.dec(p).color != Color::Gray) continue;
        TreeEdit e(t);
        e.dec[p].color = t.dec(v).color;
        e.remove_subtree(v);
        out.add(AlgebraElt(1), {e.compact()});
        return done("gray_parent_absorb", v);
    }

    // root with empty relation factorizes over its children
    if (t.dec(0).rel == Rel::None && n > 1) {
        std::vector<DecoratedTree> f;
        for (int c : t.children(0)) f.push_back(subtree(t, c));
        out.add(t.dec(0).color == Color::Gray ? AlgebraElt(1) : catalan_gf(), std::move(f));
        return done("root_empty", 0);
    }

    throw NoRuleApplies("no generic rule applies");
}

// ----------------------------------------------------------------- long stars

std::string fringe_kind_name(FringeKind k) {
    switch (k) {
    case FringeKind::GrayLongStar: return "GrayLongStar";
    case FringeKind::WhiteLongStar: return "WhiteLongStar";
    case FringeKind::WhiteLongStarPlusLeaf: return "WhiteLongStarPlusLeaf";
    case FringeKind::BlackLongStar: return "BlackLongStar";
    case FringeKind::BlackLongStarPlusLeaf: return "BlackLongStarPlusLeaf";
    }
    return "?";
}

DecoratedTree normalize_branches(const DecoratedTree& t, int v) {
    TreeEdit e(t);
    for (int w : t.children(v)) {
        if (t.is_leaf(w) || t.children(w).size() != 1) continue;
        int z = t.children(w)[0];
        if (t.dec(w).color == Color::Black && t.dec(z).color == Color::White) {
            e.dec[w].color = Color::White;
            e.dec[z].color = Color::Black;
        }
    }
    return e.compact();
}

FringeClass classify_fringe(const DecoratedTree& t, int v) {
    if (t.fringe_height(v) != 2) throw NotHeightTwo("fringe subtree does not have height 2");
    const Color cv = t.dec(v).color;
    FringeClass fc{};
    int leaves = 0;
    for (int w : t.children(v)) {
        const Decoration& dw = t.dec(w);
        if (t.is_leaf(w)) {
            if (cv == Color::Gray || dw.color == Color::Gray || dw.color == cv || dw.rel != Rel::None || dw.K != 0)
                throw NotGoodTree("unexpected leaf below the star center");
            ++leaves;
            fc.leaf = w;
            continue;
        }
        if (t.children(w).size() != 1) throw NotGoodTree("branch with several children");
        int z = t.children(w)[0];
        const Decoration& dz = t.dec(z);
        if (!t.is_leaf(z) || dz.rel != Rel::None || dz.K != 0 || dz.color == Color::Gray || dw.color == Color::Gray ||
            dz.color == dw.color)
            throw NotGoodTree("branch is not a colored pair with an empty leaf");
        if (dw.K != 0 || dw.rel == Rel::Eq) throw NotGoodTree("branch middle carries a shift or equality");
        if (dw.rel == Rel::Ge) ++fc.i;
        else if (dw.rel == Rel::Le) ++fc.j;
        else ++fc.k;
    }
    if (leaves > 1) throw NotGoodTree("several leaves below the star center");
    switch (cv) {
    case Color::Gray: fc.kind = FringeKind::GrayLongStar; break;
    case Color::White: fc.kind = leaves ? FringeKind::WhiteLongStarPlusLeaf : FringeKind::WhiteLongStar; break;
    case Color::Black: fc.kind = leaves ? FringeKind::BlackLongStarPlusLeaf : FringeKind::BlackLongStar; break;
    }
    return fc;
}

namespace {

// T with the fringe at v replaced by a long star with the given center and branch counts.
DecoratedTree star(const DecoratedTree& t, int v, Color cv, Decoration dv, int i, int j, int k, bool leaf = false) {
    TreeEdit e(t);
    for (int w : t.children(v)) e.remove_subtree(w);
    dv.color = cv;
    e.dec[v] = dv;
    auto branch = [&](Rel r) {
        int w = e.add(v, {Color::White, r, 0});
        e.add(w, {Color::Black, Rel::None, 0});
    };
    for (int a = 0; a < i; ++a) branch(Rel::Ge);
    for (int a = 0; a < j; ++a) branch(Rel::Le);
    for (int a = 0; a < k; ++a) branch(Rel::None);
    if (leaf) e.add(v, {Color::Black, Rel::None, 0});
    return e.compact();
}

// sum over x in Z_{>=0}^d with |x| = K of prod S_{=,x_i}
AlgebraElt composition_sum(int d, long K) {
    if (K < 0) return {};
    std::vector<AlgebraElt> eq(K + 1);
    for (long x = 0; x <= K; ++x) eq[x] = s_eq(x);
    std::vector<AlgebraElt> f(K + 1);
    f[0] = AlgebraElt(1);
    for (int part = 0; part < d; ++part) {
        std::vector<AlgebraElt> g(K + 1);
        for (long a = 0; a <= K; ++a)
            if (!f[a].is_zero())
                for (long x = 0; a + x <= K; ++x) g[a + x] += f[a] * eq[x];
        f = std::move(g);
    }
    return f[K];
}

}  // namespace

SumExpr Engine::long_star_reduce(const DecoratedTree& t0, int v) {
    SumExpr out;
    out.vertex = v;
    const Decoration dv = t0.dec(v);
    if (dv.rel == Rel::None) {
        if (v == 0) throw PatternMismatch("root with empty relation is factorized before long-star handling");
        // bring the children of v up to its parent
        TreeEdit e(t0);
        int p = t0.parent(v);
        for (int c : t0.children(v)) e.reparent(c, p);
        e.dec[p].K += dv.K;
        e.dec[v].K = 0;
        out.add(AlgebraElt(1), {e.compact()});
        out.rule = "bring_up";
        return out;
    }
    if (dv.rel == Rel::Eq && v != 0) throw PatternMismatch("equality below the root");
    if ((dv.rel == Rel::Le || dv.rel == Rel::Ge) && dv.K != 0) throw PatternMismatch("inequality with nonzero shift");

    DecoratedTree t = normalize_branches(t0, v);
    FringeClass fc = classify_fringe(t, v);
    switch (fc.kind) {
    case FringeKind::GrayLongStar: return gray_star(t, v, fc);
    case FringeKind::WhiteLongStarPlusLeaf:
    case FringeKind::BlackLongStarPlusLeaf: {
        // the center hands its variable to a new middle vertex adopting the leaf
        TreeEdit e(t);
        int w = e.add(v, {t.dec(v).color, Rel::None, 0});
        e.reparent(fc.leaf, w);
        e.dec[v].color = Color::Gray;
        DecoratedTree pulled = normalize_branches(e.compact(), v);
        SumExpr r = gray_star(pulled, v, classify_fringe(pulled, v));
        r.rule = "pull_down+" + r.rule;
        return r;
    }
    case FringeKind::WhiteLongStar: return white_star(t, v, fc);
    case FringeKind::BlackLongStar: {
        DecoratedTree s = normalize_branches(swap_colors(t), v);
        SumExpr r = white_star(s, v, classify_fringe(s, v));
        r.rule = "swap+" + r.rule;
        return r;
    }
    }
    throw PatternMismatch("unhandled fringe");
}

SumExpr Engine::gray_star(const DecoratedTree& t, int v, const FringeClass& fc) {
    SumExpr out;
    out.vertex = v;
    const Decoration dv = t.dec(v);
    const int i = fc.i, j = fc.j, k = fc.k, d = i + j;
    auto V = [&](int a, int b, int c) { return star(t, v, Color::Gray, dv, a, b, c); };
    const AlgebraElt inv_t2(LaurentPoly::t(-2));

    if (k >= 2) {
        out.add(inv_t2, {V(i, j, k - 1)});
        out.add(inv_t2, {V(i, j, k - 2)});
        out.add(-inv_t2, {star(t, v, Color::White, dv, i, j, k - 2)});
        out.add(-inv_t2, {star(t, v, Color::Black, dv, i, j, k - 2)});
        out.rule = "V1";
        return out;
    }
    if (k == 1) {
        out.add(AlgebraElt(1), {V(i + 1, j, 0)});
        out.add(AlgebraElt(1), {V(i, j + 1, 0)});
        out.add(-s_eq0(), {V(i, j, 0)});
        out.rule = "V4";
        return out;
    }
    if (i >= 1 && j >= 1) {
        auto sol = long_star_solve(t, v, d);
        out.add(sol[i - 1], {});
        out.rule = "linear_system";
        return out;
    }
    if (dv.rel == Rel::Eq) {
        // root equality: finite enumeration of the branch differences
        long K = dv.K;
        out.add(composition_sum(d, i > 0 ? K : -K), {});
        out.rule = "root_eq_enum_V";
        return out;
    }
    bool all_ge = j == 0;
    bool implied = (all_ge && dv.rel == Rel::Ge) || (!all_ge && dv.rel == Rel::Le);
    if (implied) {
        TreeEdit e(t);
        e.dec[v].rel = Rel::None;
        out.add(AlgebraElt(1), {e.compact()});
        out.rule = "V2";
    } else {
        AlgebraElt c = s_eq0().pow(d);
        if (v == 0) out.add(c, {});
        else out.add(c, {without_subtree(t, v)});
        out.rule = "V3";
    }
    return out;
}

SumExpr Engine::white_star(const DecoratedTree& t, int v, const FringeClass& fc) {
    SumExpr out;
    out.vertex = v;
    const Decoration dv = t.dec(v);
    const int i = fc.i, j = fc.j, k = fc.k, d = i + j;
    auto U = [&](int a, int b, int c) { return star(t, v, Color::White, dv, a, b, c); };

    if (k >= 1) {
        Decoration up = dv;
        up.K += 1;
        const AlgebraElt inv_t(LaurentPoly::t(-1));
        out.add(inv_t, {star(t, v, Color::White, up, i, j, k - 1, true)});
        out.add(-inv_t, {star(t, v, Color::Black, up, i, j, k - 1)});
        out.rule = "reduc_U_k";
        return out;
    }
    if (j >= 1) {
        out.add(AlgebraElt(1), {U(i, j - 1, 1)});
        out.add(s_eq0(), {U(i, j - 1, 0)});
        out.add(AlgebraElt(-1), {U(i + 1, j - 1, 0)});
        out.rule = "reduc_U_ij";
        return out;
    }
    if (dv.rel == Rel::Eq) {
        // root variable r plus branch differences sum to K
        AlgebraElt r;
        for (long q = 0; q <= dv.K; ++q)
            r += AlgebraElt(LaurentPoly::monomial(Rational(catalan(q)), q)) * composition_sum(d, dv.K - q);
        out.add(r, {});
        out.rule = "root_eq_enum_U";
        return out;
    }
    if (dv.rel == Rel::Ge) {
        TreeEdit e(t);
        e.dec[v].rel = Rel::None;
        out.add(AlgebraElt(1), {e.compact()});
        out.rule = "U1";
    } else {
        AlgebraElt c = s_eq0().pow(d);
        if (v == 0) out.add(c, {});
        else out.add(c, {without_subtree(t, v)});
        out.rule = "U2";
    }
    return out;
}

std::vector<AlgebraElt> Engine::long_star_solve(const DecoratedTree& t, int v, int d) {
    const Decoration dv = t.dec(v);
    auto V = [&](int a, int b, int c) { return star(t, v, Color::Gray, dv, a, b, c); };
    const AlgebraElt& se = s_eq0();
    const AlgebraElt se2 = se * se;
    AlgebraElt A0 = reduce(V(0, d, 0));
    AlgebraElt Ad = reduce(V(d, 0, 0));
    std::vector<AlgebraElt> rhs(d - 1);
    for (int a = 1; a <= d - 1; ++a) {
        int b = d - 1 - a;
        AlgebraElt X = reduce(V(a - 1, b, 2)) + reduce(V(a - 1, b, 1)) * se.scaled(2) + reduce(V(a - 1, b, 0)) * se2;
        if (a == 1) X -= A0;
        if (a == d - 1) X -= Ad;
        rhs[a - 1] = std::move(X);
    }
    auto sol = solve_tridiagonal(rhs);
    if (opt_.memo)
        for (int a = 1; a <= d - 1; ++a) memo_.emplace(V(a, d - a, 0).canonical().key(), sol[a - 1]);
    return sol;
}

std::vector<AlgebraElt> solve_tridiagonal(const std::vector<AlgebraElt>& r) {
    const int n = (int)r.size();
    std::vector<Rational> cp(n);
    std::vector<AlgebraElt> dp(n);
    for (int a = 0; a < n; ++a) {
        Rational m = a == 0 ? Rational(2) : Rational(2) - cp[a - 1];
        cp[a] = Rational(1) / m;
        dp[a] = (a == 0 ? r[a] : r[a] - dp[a - 1]).scaled(Rational(1) / m);
    }
    std::vector<AlgebraElt> x(n);
    for (int a = n - 1; a >= 0; --a) x[a] = a == n - 1 ? dp[a] : dp[a] - x[a + 1].scaled(cp[a]);
    return x;
}

Rational tridiagonal_det(int n) {
    // elimination pivots of the 2-on-diagonal, 1-off-diagonal matrix
    Rational det = 1, piv = 0;
    for (int a = 0; a < n; ++a) {
        piv = a == 0 ? Rational(2) : Rational(2) - Rational(1) / piv;
        det *= piv;
    }
    return det;
}

// --------------------------------------------------------------------- driver

void Engine::trace(const SumExpr& e) {
    if (!opt_.trace) return;
    *opt_.trace << "RULE " << e.rule << " AT " << e.vertex << " -> " << e.handle_count() << " subproblems\n";
}

SumExpr Engine::step(const DecoratedTree& t) {
    if (t.size() == 1) {
        SumExpr e;
        e.add(height_zero_sum(t.dec(0)), {});
        e.rule = "height_zero";
        e.vertex = 0;
        return e;
    }
    try {
        return rewrite_once(t);
    } catch (const NoRuleApplies&) {
    }
    if (t.height() == 1) {
        SumExpr e;
        e.add(base_sum(t.dec(0).rel, t.dec(0).K), {});
        e.rule = "base_case";
        e.vertex = 0;
        return e;
    }
    for (int v = 0; v < t.size(); ++v)
        if (t.fringe_height(v) == 2) return long_star_reduce(t, v);
    throw PatternMismatch("good tree without a height-2 fringe");
}

AlgebraElt Engine::evaluate(const SumExpr& e) {
    AlgebraElt r;
    for (auto& term : e.terms) {
        if (term.coeff.is_zero()) continue;
        AlgebraElt p = term.coeff;
        for (auto& f : term.factors) {
            if (p.is_zero()) break;
            p *= reduce(f);
        }
        r += p;
    }
    return r;
}

AlgebraElt Engine::reduce(const DecoratedTree& t) {
    if (depth_ == 0) cycles_ = 0;
    return reduce_canonical(t.canonical());
}

AlgebraElt Engine::reduce_canonical(const DecoratedTree& t) {
    std::string key = t.key();
    if (opt_.memo)
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (active_.count(key)) throw DepthGuardExceeded("reduction revisits a tree still in progress: " + key);
    if (++cycles_ > opt_.max_cycles) throw DepthGuardExceeded("driver cycle limit exceeded");

    struct Guard {
        Engine& e;
        std::string k;
        Guard(Engine& e, std::string k) : e(e), k(std::move(k)) {
            e.active_.insert(this->k);
            ++e.depth_;
        }
        ~Guard() {
            e.active_.erase(k);
            --e.depth_;
        }
    } guard(*this, key);

    SumExpr e = step(t);
    trace(e);
    if (opt_.check_measure && e.rule != "height_zero" && e.rule != "base_case" && e.vertex >= 0) {
        static const std::unordered_set<std::string> generic = {
            "equality_split", "k_shift", "gray_leaf", "leaf_inequality", "empty_shift",
            "twin_leaves", "consecutive_leaf", "gray_parent_absorb", "root_empty", "bring_up"};
        if (generic.count(e.rule)) {
            Measure m = termination_measure(t);
            for (auto& term : e.terms)
                for (auto& f : term.factors)
                    if (!(termination_measure(f) < m))
                        throw std::logic_error("termination measure did not decrease under rule " + e.rule);
        }
    }
    AlgebraElt r = evaluate(e);
    if (opt_.memo) memo_[key] = r;
    return r;
}

}  // namespace catsum
