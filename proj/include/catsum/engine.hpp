#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "catsum/algebra.hpp"
#include "catsum/tree.hpp"

namespace catsum {

struct DepthGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoRuleApplies : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PatternMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHeightTwo : PatternMismatch {
    using PatternMismatch::PatternMismatch;
};
struct NotGoodTree : PatternMismatch {
    using PatternMismatch::PatternMismatch;
};

struct SumTerm {
    AlgebraElt coeff;
    std::vector<DecoratedTree> factors;
};

// coeff * prod S(factor), summed
struct SumExpr {
    std::vector<SumTerm> terms;
    std::string rule;
    int vertex = -1;

    void add(AlgebraElt c, std::vector<DecoratedTree> f) { terms.push_back({std::move(c), std::move(f)}); }
    int handle_count() const;
};

AlgebraElt base_sum(Rel rel, long K);
AlgebraElt height_zero_sum(const Decoration& d);

// Total path length, depth-weighted |K|, goodness violations, vertex count.
using Measure = std::tuple<long, Integer, int, int>;
Measure termination_measure(const DecoratedTree& t);
bool is_good(const DecoratedTree& t);

// Generic normalisation rules; throws NoRuleApplies on a good tree with nothing to do.
SumExpr rewrite_once(const DecoratedTree& t);

enum class FringeKind { GrayLongStar, WhiteLongStar, WhiteLongStarPlusLeaf, BlackLongStar, BlackLongStarPlusLeaf };

struct FringeClass {
    FringeKind kind;
    int i = 0;  // branches with (>=,0) middle
    int j = 0;  // branches with (<=,0) middle
    int k = 0;  // branches with (empty,0) middle
    int leaf = -1;
};

std::string fringe_kind_name(FringeKind k);
FringeClass classify_fringe(const DecoratedTree& t, int v);
// Swap colors inside each depth-1 pair below v so the middle vertex is white.
DecoratedTree normalize_branches(const DecoratedTree& t, int v);

class Engine {
public:
    struct Options {
        bool memo = true;
        bool check_measure = false;
        std::uint64_t max_cycles = 100000;
        std::ostream* trace = nullptr;
    };

    Engine() = default;
    explicit Engine(Options o) : opt_(o) {}

    AlgebraElt reduce(const DecoratedTree& t);
    AlgebraElt reduce(const PlainTree& t) { return reduce(canonical_decorate(t)); }
    AlgebraElt evaluate(const SumExpr& e);

    SumExpr long_star_reduce(const DecoratedTree& t, int v);
    std::vector<AlgebraElt> long_star_solve(const DecoratedTree& t, int v, int d);

    std::size_t memo_size() const { return memo_.size(); }
    std::uint64_t cycles() const { return cycles_; }

private:
    AlgebraElt reduce_canonical(const DecoratedTree& t);
    SumExpr step(const DecoratedTree& t);
    SumExpr gray_star(const DecoratedTree& t, int v, const FringeClass& fc);
    SumExpr white_star(const DecoratedTree& t, int v, const FringeClass& fc);
    void trace(const SumExpr& e);

    Options opt_;
    std::unordered_map<std::string, AlgebraElt> memo_;
    std::unordered_set<std::string> active_;
    std::uint64_t cycles_ = 0;
    int depth_ = 0;
};

// Solve (2I - J) x = r over exact rationals (Thomas algorithm).
std::vector<AlgebraElt> solve_tridiagonal(const std::vector<AlgebraElt>& rhs);
Rational tridiagonal_det(int n);

}  // namespace catsum
