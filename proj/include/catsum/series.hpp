#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "catsum/algebra.hpp"
#include "catsum/tree.hpp"

namespace catsum {

struct NegativePowerResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficients of t^0 .. t^N.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : c_(order + 1) {}
    TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return (int)c_.size() - 1; }
    const Rational& operator[](int n) const { return c_[n]; }
    Rational& operator[](int n) { return c_[n]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries truncated(int order) const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries scaled(const Rational& x) const;
    // multiply by t^k; negative k requires the dropped coefficients to vanish
    TruncatedSeries shifted(int k) const;
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    std::string str() const;
    nlohmann::json to_json() const;

private:
    std::vector<Rational> c_;
};

enum class Generator { H1, H2, S, C };

TruncatedSeries generator_series(Generator which, int N);
TruncatedSeries series_expand(const AlgebraElt& x, int N);

constexpr std::uint64_t default_oracle_budget = 100000000ULL;
// honours CATSUM_ORACLE_BUDGET
std::uint64_t oracle_budget_from_env();

TruncatedSeries brute_force_decorated(const DecoratedTree& t, int N, std::uint64_t budget = default_oracle_budget);
TruncatedSeries brute_force_edge(const PlainTree& t, int N, std::uint64_t budget = default_oracle_budget);

}  // namespace catsum
