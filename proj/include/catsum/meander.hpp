#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catsum/algebra.hpp"
#include "catsum/engine.hpp"
#include "catsum/tree.hpp"

namespace catsum {

struct NotAMatching : ParseError {
    using ParseError::ParseError;
};
struct CrossingArcs : ParseError {
    using ParseError::ParseError;
};
struct MultipleLoops : ParseError {
    using ParseError::ParseError;
};

using Arc = std::pair<int, int>;

struct Meander {
    int k = 0;
    std::vector<Arc> upper, lower;  // sorted, a < b
    std::string str() const;
};

std::vector<Arc> parse_arcs(const std::string& text);
Meander make_meander(std::vector<Arc> upper, std::vector<Arc> lower);
Meander parse_meander(const std::string& text);
Meander reflect(const Meander& m);
std::vector<Meander> all_meanders(int k);
std::vector<std::vector<Arc>> noncrossing_matchings(int points);

enum class Side { Upper, Lower };

struct Face {
    Side side;
    Arc arc;
    std::vector<int> indices;
    bool interior;
};

std::vector<Face> faces(const Meander& m);

struct ForestComponent {
    PlainTree tree;
    std::vector<int> face_ids;  // tree vertex -> index into faces()
};

std::vector<ForestComponent> forest(const Meander& m);

PiPoly probability(const Meander& m, Engine& engine);
PiPoly probability(const Meander& m);

nlohmann::json meander_report(const Meander& m, Engine& engine);

}  // namespace catsum
