#include "catsum/meander.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace catsum {

std::string Meander::str() const {
    auto arcs = [](const std::vector<Arc>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + std::to_string(v[i].first) + "-" + std::to_string(v[i].second);
        return s;
    };
    return "upper: " + arcs(upper) + "; lower: " + arcs(lower);
}

std::vector<Arc> parse_arcs(const std::string& text) {
    std::vector<Arc> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        auto dash = item.find('-');
        if (dash == std::string::npos || dash == 0) throw ParseError("arc '" + item + "' is not of the form a-b");
        try {
            size_t u1 = 0, u2 = 0;
            std::string l = item.substr(0, dash), r = item.substr(dash + 1);
            int a = std::stoi(l, &u1), c = std::stoi(r, &u2);
            if (u1 != l.size() || u2 != r.size() || a < 0 || c < 0) throw std::invalid_argument(item);
            out.push_back({std::min(a, c), std::max(a, c)});
        } catch (const std::logic_error&) {
            throw ParseError("arc '" + item + "' is not of the form a-b");
        }
    }
    return out;
}

static void check_matching(const std::vector<Arc>& arcs, int points, const char* side) {
    std::vector<int> seen(points, 0);
    for (auto [a, b] : arcs) {
        if (a == b || b >= points) throw NotAMatching(std::string(side) + " arcs are not a perfect matching");
        ++seen[a], ++seen[b];
    }
    for (int s : seen)
        if (s != 1) throw NotAMatching(std::string(side) + " arcs are not a perfect matching");
    for (auto [a, b] : arcs)
        for (auto [c, d] : arcs)
            if (a < c && c < b && b < d) throw CrossingArcs(std::string(side) + " arcs cross");
}

Meander make_meander(std::vector<Arc> upper, std::vector<Arc> lower) {
    for (auto* v : {&upper, &lower}) {
        for (auto& a : *v)
            if (a.first > a.second) std::swap(a.first, a.second);
        std::sort(v->begin(), v->end());
    }
    if (upper.empty() || upper.size() != lower.size()) throw NotAMatching("upper and lower need the same positive number of arcs");
    int points = 2 * (int)upper.size();
    check_matching(upper, points, "upper");
    check_matching(lower, points, "lower");
    std::vector<int> up(points), lo(points);
    for (auto [a, b] : upper) up[a] = b, up[b] = a;
    for (auto [a, b] : lower) lo[a] = b, lo[b] = a;
    int x = 0, visited = 0;
    do {
        x = up[x];
        x = lo[x];
        visited += 2;
    } while (x != 0);
    if (visited != points) throw MultipleLoops("arcs form more than one loop");
    return Meander{(int)upper.size(), upper, lower};
}

Meander parse_meander(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("expected 'upper: ...; lower: ...'");
    auto part = [&](std::string s, const std::string& label) {
        auto b = s.find_first_not_of(" \t\n");
        if (b == std::string::npos || s.compare(b, label.size(), label) != 0)
            throw ParseError("expected '" + label + "'");
        b += label.size();
        auto colon = s.find_first_not_of(" \t", b);
        if (colon == std::string::npos || s[colon] != ':') throw ParseError("expected ':' after " + label);
        return parse_arcs(s.substr(colon + 1));
    };
    return make_meander(part(text.substr(0, semi), "upper"), part(text.substr(semi + 1), "lower"));
}

Meander reflect(const Meander& m) {
    int last = 2 * m.k - 1;
    auto flip = [&](const std::vector<Arc>& v) {
        std::vector<Arc> r;
        for (auto [a, b] : v) r.push_back({last - b, last - a});
        return r;
    };
    return make_meander(flip(m.upper), flip(m.lower));
}

std::vector<std::vector<Arc>> noncrossing_matchings(int points) {
    // matchings of the interval [lo, hi)
    std::function<std::vector<std::vector<Arc>>(int, int)> interval = [&](int lo, int hi) {
        std::vector<std::vector<Arc>> res;
        if (lo >= hi) {
            res.push_back({});
            return res;
        }
        for (int m = lo + 1; m < hi; m += 2)
            for (auto& in : interval(lo + 1, m))
                for (auto& rest : interval(m + 1, hi)) {
                    std::vector<Arc> v = in;
                    v.push_back({lo, m});
                    v.insert(v.end(), rest.begin(), rest.end());
                    std::sort(v.begin(), v.end());
                    res.push_back(v);
                }
        return res;
    };
    return interval(0, points);
}

std::vector<Meander> all_meanders(int k) {
    std::vector<Meander> out;
    auto ms = noncrossing_matchings(2 * k);
    for (auto& u : ms)
        for (auto& l : ms) {
            try {
                out.push_back(make_meander(u, l));
            } catch (const MultipleLoops&) {
            }
        }
    return out;
}

// innermost arc of one side covering segment i, or -1
static int cover(const std::vector<Arc>& arcs, int i) {
    int best = -1;
    for (int a = 0; a < (int)arcs.size(); ++a)
        if (arcs[a].first <= i && i < arcs[a].second && (best < 0 || arcs[a].first > arcs[best].first)) best = a;
    return best;
}

std::vector<Face> faces(const Meander& m) {
    std::vector<Face> fs;
    for (auto [side, arcs] : {std::pair{Side::Upper, &m.upper}, std::pair{Side::Lower, &m.lower}})
        for (auto& a : *arcs) fs.push_back({side, a, {}, false});
    const int ku = (int)m.upper.size();
    for (int i = 0; i + 1 < 2 * m.k; ++i) {
        int u = cover(m.upper, i), l = cover(m.lower, i);
        if (u < 0 && l < 0) throw std::logic_error("segment uncovered on both sides");
        if (u >= 0) fs[u].indices.push_back(i);
        if (l >= 0) fs[ku + l].indices.push_back(i);
    }
    for (auto& f : fs) {
        if (f.indices.empty()) throw std::logic_error("face without boundary segment");
        bool even = std::all_of(f.indices.begin(), f.indices.end(), [](int i) { return i % 2 == 0; });
        bool odd = std::all_of(f.indices.begin(), f.indices.end(), [](int i) { return i % 2 == 1; });
        if (!even && !odd) throw std::logic_error("face with mixed index parity");
        f.interior = even;
    }
    return fs;
}

std::vector<ForestComponent> forest(const Meander& m) {
    auto fs = faces(m);
    const int n = (int)fs.size(), ku = (int)m.upper.size();
    std::vector<std::vector<int>> adj(n);
    std::vector<int> half(n, 0);
    int edges = 0;
    for (int i = 0; i + 1 < 2 * m.k; ++i) {
        int u = cover(m.upper, i), l = cover(m.lower, i);
        if (u >= 0 && l >= 0) {
            adj[u].push_back(ku + l);
            adj[ku + l].push_back(u);
            ++edges;
        } else {
            ++half[u >= 0 ? u : ku + l];
        }
    }
    std::vector<int> comp(n, -1);
    std::vector<ForestComponent> out;
    int interior_components = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> verts;
        std::function<void(int)> mark = [&](int v) {
            comp[v] = (int)out.size();
            verts.push_back(v);
            for (int u : adj[v])
                if (comp[u] < 0) mark(u);
        };
        mark(s);
        int halves = 0, root = verts.front(), deg = 0;
        for (int v : verts) {
            halves += half[v];
            deg += (int)adj[v].size();
            if (half[v]) root = v;
        }
        if (deg / 2 != (int)verts.size() - 1) throw std::logic_error("face graph component is not a tree");
        bool interior = fs[verts.front()].interior;
        for (int v : verts)
            if (fs[v].interior != interior) throw std::logic_error("component mixes interior and exterior faces");
        if (interior) {
            if (halves != 0) throw std::logic_error("interior component carries a half-edge");
            ++interior_components;
        } else if (halves != 1) {
            throw std::logic_error("exterior component without exactly one half-edge");
        }
        ForestComponent c;
        c.tree.halfedge = halves == 1;
        std::function<void(int, int, int)> build = [&](int v, int from, int par) {
            int id = (int)c.tree.parent.size();
            c.tree.parent.push_back(par);
            c.face_ids.push_back(v);
            for (int u : adj[v])
                if (u != from) build(u, v, id);
        };
        build(root, -1, -1);
        out.push_back(std::move(c));
    }
    if (interior_components != 1) throw std::logic_error("interior faces do not form a single tree");
    (void)edges;
    return out;
}

PiPoly probability(const Meander& m, Engine& engine) {
    Rational c(m.k);
    for (int i = 0; i < 4 * m.k - 1; ++i) c /= 2;
    PiPoly p(c);
    for (auto& comp : forest(m)) p = p * eval_quarter(engine.reduce(comp.tree));
    return p;
}

PiPoly probability(const Meander& m) {
    Engine e;
    return probability(m, e);
}

nlohmann::json meander_report(const Meander& m, Engine& engine) {
    nlohmann::json fj = nlohmann::json::array();
    for (auto& f : faces(m))
        fj.push_back({{"side", f.side == Side::Upper ? "upper" : "lower"},
                      {"arc", {f.arc.first, f.arc.second}},
                      {"indices", f.indices},
                      {"interior", f.interior}});
    nlohmann::json forest_j = nlohmann::json::array();
    for (auto& c : forest(m)) forest_j.push_back({{"tree", c.tree.str()}, {"faces", c.face_ids}});
    PiPoly p = probability(m, engine);
    return {{"meander", m.str()}, {"k", m.k}, {"faces", fj}, {"forest", forest_j}, {"probability", p.to_json()}};
}

}  // namespace catsum
