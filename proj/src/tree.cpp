#include "catsum/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace catsum {

// ------------------------------------------------------------------ PlainTree

std::vector<std::vector<int>> PlainTree::children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (int v = 1; v < size(); ++v) ch[parent[v]].push_back(v);
    return ch;
}

std::string PlainTree::str() const {
    auto ch = children();
    std::function<std::string(int)> rec = [&](int v) {
        std::string s = "(";
        for (int c : ch[v]) s += rec(c);
        return s + ")";
    };
    return (halfedge ? "halfedge:" : "") + rec(0);
}

PlainTree parse_plain(const std::string& text) {
    PlainTree t;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    skip();
    const std::string prefix = "halfedge:";
    if (text.compare(pos, prefix.size(), prefix) == 0) {
        t.halfedge = true;
        pos += prefix.size();
    }
    std::vector<int> stack;
    skip();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' at position " + std::to_string(pos));
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isspace((unsigned char)c)) continue;
        if (c == '(') {
            if (stack.empty() && !t.parent.empty())
                throw ParseError("trailing input at position " + std::to_string(pos));
            t.parent.push_back(stack.empty() ? -1 : stack.back());
            stack.push_back(t.size() - 1);
        } else if (c == ')') {
            if (stack.empty()) throw ParseError("unbalanced ')' at position " + std::to_string(pos));
            stack.pop_back();
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(pos));
        }
    }
    if (!stack.empty()) throw ParseError("unterminated tree at position " + std::to_string(pos));
    return t;
}

// ----------------------------------------------------------------- Decoration

std::string rel_token(Rel r) {
    switch (r) {
    case Rel::Eq: return "eq";
    case Rel::Le: return "le";
    case Rel::Ge: return "ge";
    case Rel::None: return "none";
    }
    return "?";
}

std::string color_token(Color c) {
    switch (c) {
    case Color::White: return "white";
    case Color::Black: return "black";
    case Color::Gray: return "gray";
    }
    return "?";
}

std::string dec_str(const Decoration& d) {
    static const char* rs[] = {"=", "<=", ">=", "0"};
    static const char cs[] = {'b', 'g', 'w'};
    return std::string(1, cs[(int)d.color + 1]) + rs[(int)d.rel] + std::to_string(d.K);
}

// -------------------------------------------------------------- DecoratedTree

DecoratedTree::DecoratedTree(std::vector<int> parent, std::vector<Decoration> dec)
    : parent_(std::move(parent)), dec_(std::move(dec)) {
    if (parent_.empty() || parent_.size() != dec_.size()) throw std::invalid_argument("bad decorated tree");
    if (parent_[0] != -1) throw std::invalid_argument("vertex 0 must be the root");
    for (int v = 1; v < size(); ++v)
        if (parent_[v] < 0 || parent_[v] >= v) throw std::invalid_argument("parents must precede children");
    build_children();
}

void DecoratedTree::build_children() {
    children_.assign(parent_.size(), {});
    for (int v = 1; v < size(); ++v) children_[parent_[v]].push_back(v);
}

int DecoratedTree::depth(int v) const {
    int d = 0;
    while (parent_[v] >= 0) v = parent_[v], ++d;
    return d;
}

int DecoratedTree::fringe_height(int v) const {
    int h = 0;
    for (int c : children_[v]) h = std::max(h, 1 + fringe_height(c));
    return h;
}

int DecoratedTree::height() const { return fringe_height(0); }

long DecoratedTree::path_length() const {
    std::vector<int> d(size(), 0);
    long L = 0;
    for (int v = 1; v < size(); ++v) L += d[v] = d[parent_[v]] + 1;
    return L;
}

int DecoratedTree::non_gray_count() const {
    int n = 0;
    for (auto& d : dec_) n += d.color != Color::Gray;
    return n;
}

std::string DecoratedTree::key() const {
    std::vector<std::string> k(size());
    for (int v = size() - 1; v >= 0; --v) {
        std::vector<std::string> ch;
        for (int c : children_[v]) ch.push_back(std::move(k[c]));
        std::sort(ch.begin(), ch.end());
        std::string s = "(" + dec_str(dec_[v]);
        for (auto& c : ch) s += c;
        k[v] = s + ")";
    }
    return k[0];
}

DecoratedTree DecoratedTree::canonical() const {
    std::vector<std::string> k(size());
    std::vector<std::vector<int>> order(size());
    for (int v = size() - 1; v >= 0; --v) {
        order[v] = children_[v];
        std::sort(order[v].begin(), order[v].end(), [&](int a, int b) { return k[a] < k[b]; });
        std::string s = "(" + dec_str(dec_[v]);
        for (int c : order[v]) s += k[c];
        k[v] = s + ")";
    }
    std::vector<int> par;
    std::vector<Decoration> dec;
    std::function<void(int, int)> rec = [&](int v, int p) {
        int id = (int)par.size();
        par.push_back(p);
        dec.push_back(dec_[v]);
        for (int c : order[v]) rec(c, id);
    };
    rec(0, -1);
    return DecoratedTree(std::move(par), std::move(dec));
}

nlohmann::json DecoratedTree::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (int v = 0; v < size(); ++v)
        vs.push_back({{"parent", parent_[v]},
                      {"color", color_token(dec_[v].color)},
                      {"rel", rel_token(dec_[v].rel)},
                      {"k", dec_[v].K}});
    return {{"vertices", vs}};
}

std::string DecoratedTree::str() const {
    std::function<std::string(int)> rec = [&](int v) {
        std::string s = "(" + dec_str(dec_[v]);
        for (int c : children_[v]) s += rec(c);
        return s + ")";
    };
    return rec(0);
}

// ------------------------------------------------------------------- TreeEdit

TreeEdit::TreeEdit(const DecoratedTree& t)
    : parent(t.parents()), dec(t.decorations()), alive(t.size(), true) {}

int TreeEdit::add(int par, Decoration d) {
    parent.push_back(par);
    dec.push_back(d);
    alive.push_back(true);
    return (int)parent.size() - 1;
}

std::vector<int> TreeEdit::children_of(int v) const {
    std::vector<int> r;
    for (int u = 0; u < (int)parent.size(); ++u)
        if (alive[u] && parent[u] == v) r.push_back(u);
    return r;
}

void TreeEdit::remove_subtree(int v) {
    alive[v] = false;
    for (int c : children_of(v)) remove_subtree(c);
}

DecoratedTree TreeEdit::compact() const {
    int root = -1;
    for (int v = 0; v < (int)parent.size(); ++v)
        if (alive[v] && parent[v] == -1) root = v;
    std::vector<std::vector<int>> ch(parent.size());
    for (int v = 0; v < (int)parent.size(); ++v)
        if (alive[v] && parent[v] >= 0) ch[parent[v]].push_back(v);
    std::vector<int> par;
    std::vector<Decoration> d;
    std::function<void(int, int)> rec = [&](int v, int p) {
        int id = (int)par.size();
        par.push_back(p);
        d.push_back(dec[v]);
        for (int c : ch[v]) rec(c, id);
    };
    rec(root, -1);
    return DecoratedTree(std::move(par), std::move(d));
}

// ------------------------------------------------------------ transformations

DecoratedTree canonical_decorate(const PlainTree& t) {
    std::vector<Decoration> dec(t.size());
    std::vector<int> depth(t.size(), 0);
    for (int v = 1; v < t.size(); ++v) depth[v] = depth[t.parent[v]] + 1;
    for (int v = 0; v < t.size(); ++v) {
        if (depth[v] % 2 == 0) dec[v] = {Color::White, Rel::Ge, 0};
        else dec[v] = {Color::Black, Rel::Le, 0};
    }
    if (!t.halfedge) dec[0].rel = Rel::Eq;
    return DecoratedTree(t.parent, dec);
}

DecoratedTree swap_colors(const DecoratedTree& t) {
    std::vector<Decoration> dec = t.decorations();
    for (auto& d : dec) {
        d.color = Color(-(int)d.color);
        if (d.rel == Rel::Le) d.rel = Rel::Ge;
        else if (d.rel == Rel::Ge) d.rel = Rel::Le;
        d.K = -d.K;
    }
    return DecoratedTree(t.parents(), dec);
}

DecoratedTree parse_decorated(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("schema: expected object with 'vertices' array");
    std::vector<int> par;
    std::vector<Decoration> dec;
    int idx = 0;
    for (auto& v : j["vertices"]) {
        if (!v.is_object()) throw ParseError("schema: vertex " + std::to_string(idx) + " is not an object");
        for (const char* f : {"parent", "color", "rel", "k"})
            if (!v.contains(f)) throw ParseError(std::string("schema: vertex ") + std::to_string(idx) + " lacks '" + f + "'");
        if (!v["parent"].is_number_integer()) throw ParseError("schema: parent must be an integer");
        int p = v["parent"].get<int>();
        if (idx == 0 && p != -1) throw ParseError("parent order: vertex 0 must be the root");
        if (idx > 0 && (p < 0 || p >= idx))
            throw ParseError("parent order: vertex " + std::to_string(idx) + " listed before its parent");
        Decoration d;
        std::string c = v["color"].is_string() ? v["color"].get<std::string>() : "";
        if (c == "white") d.color = Color::White;
        else if (c == "black") d.color = Color::Black;
        else if (c == "gray") d.color = Color::Gray;
        else throw ParseError("schema: unknown color '" + c + "'");
        std::string r = v["rel"].is_string() ? v["rel"].get<std::string>() : "";
        if (r == "eq") d.rel = Rel::Eq;
        else if (r == "le") d.rel = Rel::Le;
        else if (r == "ge") d.rel = Rel::Ge;
        else if (r == "none") d.rel = Rel::None;
        else throw ParseError("unknown relation token '" + r + "'");
        if (v["k"].is_number_integer()) d.K = v["k"].get<long>();
        else if (v["k"].is_string()) {
            try {
                size_t used = 0;
                d.K = std::stol(v["k"].get<std::string>(), &used);
                if (used != v["k"].get<std::string>().size()) throw std::invalid_argument("k");
            } catch (const std::exception&) {
                throw ParseError("schema: k must be an integer");
            }
        } else throw ParseError("schema: k must be an integer");
        par.push_back(p);
        dec.push_back(d);
        ++idx;
    }
    if (par.empty()) throw ParseError("schema: empty vertex list");
    return DecoratedTree(par, dec);
}

DecoratedTree parse_decorated_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    return parse_decorated(j);
}

// ---------------------------------------------------------------- enumeration

std::vector<std::string> rooted_trees(int n) {
    // forests of unordered rooted trees as sorted multisets of canonical strings
    static std::map<int, std::vector<std::string>> memo;
    static std::recursive_mutex mu;
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::set<std::string> out;
    if (n == 1) out.insert("()");
    else {
        std::function<void(int, std::string, std::vector<std::string>)> forests =
            [&](int left, std::string maxs, std::vector<std::string> acc) {
                if (left == 0) {
                    std::string s = "(";
                    for (auto& a : acc) s += a;
                    out.insert(s + ")");
                    return;
                }
                for (int m = 1; m <= left; ++m)
                    for (auto& sub : rooted_trees(m))
                        if (maxs.empty() || sub <= maxs) {
                            auto a = acc;
                            a.push_back(sub);
                            forests(left - m, sub, a);
                        }
            };
        forests(n - 1, "", {});
    }
    std::vector<std::string> r(out.begin(), out.end());
    memo[n] = r;
    return r;
}

static std::string rooted_string(const std::vector<std::vector<int>>& adj, int v, int p) {
    std::vector<std::string> ch;
    for (int u : adj[v])
        if (u != p) ch.push_back(rooted_string(adj, u, v));
    std::sort(ch.begin(), ch.end(), std::greater<>());
    std::string s = "(";
    for (auto& c : ch) s += c;
    return s + ")";
}

std::string centroid_form(const PlainTree& t) {
    int n = t.size();
    std::vector<std::vector<int>> adj(n);
    for (int v = 1; v < n; ++v) adj[v].push_back(t.parent[v]), adj[t.parent[v]].push_back(v);
    std::vector<int> sz(n, 1);
    for (int v = n - 1; v > 0; --v) sz[t.parent[v]] += sz[v];
    std::vector<int> cents;
    for (int v = 0; v < n; ++v) {
        int worst = n - sz[v];
        for (int u : adj[v])
            if (u != t.parent[v]) worst = std::max(worst, sz[u]);
        if (2 * worst <= n) cents.push_back(v);
    }
    std::string best;
    for (int c : cents) {
        std::string s = rooted_string(adj, c, -1);
        if (best.empty() || s > best) best = s;
    }
    return best;
}

std::vector<std::string> free_trees(int n) {
    std::set<std::string> out;
    for (auto& s : rooted_trees(n)) out.insert(centroid_form(parse_plain(s)));
    return {out.begin(), out.end()};
}

}  // namespace catsum
