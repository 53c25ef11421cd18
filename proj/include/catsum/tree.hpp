#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace catsum {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlainTree {
    std::vector<int> parent;  // parent[0] == -1, parent[v] < v
    bool halfedge = false;

    int size() const { return (int)parent.size(); }
    std::vector<std::vector<int>> children() const;
    std::string str() const;
};

PlainTree parse_plain(const std::string& text);

enum class Color { Black = -1, Gray = 0, White = 1 };
enum class Rel { Eq, Le, Ge, None };

struct Decoration {
    Color color = Color::Gray;
    Rel rel = Rel::None;
    long K = 0;
    bool operator==(const Decoration&) const = default;
};

std::string rel_token(Rel r);
std::string color_token(Color c);
std::string dec_str(const Decoration& d);

class DecoratedTree {
public:
    DecoratedTree() = default;
    DecoratedTree(std::vector<int> parent, std::vector<Decoration> dec);

    int size() const { return (int)parent_.size(); }
    int parent(int v) const { return parent_[v]; }
    const Decoration& dec(int v) const { return dec_[v]; }
    Decoration& dec(int v) { return dec_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    const std::vector<int>& parents() const { return parent_; }
    const std::vector<Decoration>& decorations() const { return dec_; }

    bool is_leaf(int v) const { return children_[v].empty(); }
    int depth(int v) const;
    int height() const;
    int fringe_height(int v) const;
    long path_length() const;
    int non_gray_count() const;

    std::string key() const;               // invariant under sibling order
    DecoratedTree canonical() const;       // children sorted by key, preorder indices
    nlohmann::json to_json() const;
    std::string str() const;

private:
    void build_children();
    std::vector<int> parent_;
    std::vector<Decoration> dec_;
    std::vector<std::vector<int>> children_;
};

// Mutable scratch form used by rewrite rules; compact() restores preorder indexing.
struct TreeEdit {
    std::vector<int> parent;
    std::vector<Decoration> dec;
    std::vector<bool> alive;

    explicit TreeEdit(const DecoratedTree& t);
    int add(int par, Decoration d);
    void remove_subtree(int v);
    void reparent(int v, int p) { parent[v] = p; }
    std::vector<int> children_of(int v) const;
    DecoratedTree compact() const;
};

DecoratedTree canonical_decorate(const PlainTree& t);
DecoratedTree swap_colors(const DecoratedTree& t);
DecoratedTree parse_decorated(const nlohmann::json& j);
DecoratedTree parse_decorated_text(const std::string& text);

// All unordered rooted trees with n vertices, as parenthesis strings.
std::vector<std::string> rooted_trees(int n);
// All free trees with n vertices, each rooted at its canonical centroid.
std::vector<std::string> free_trees(int n);
// Re-root at the canonical centroid and return the canonical string.
std::string centroid_form(const PlainTree& t);

}  // namespace catsum
