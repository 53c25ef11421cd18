#pragma once

#include <string>

#include "catsum/algebra.hpp"

namespace catsum {

// Parses expressions over t, H1, H2, s with + - * / ^ and parentheses.
// Division is only by c*t^k. With sqrt_t the symbol t stands for t^2.
AlgebraElt parse_algebra(const std::string& text, bool sqrt_t = false);

// Parses sums of terms c, c/pi^d, c*pi^-d (as printed by PiPoly::pretty / canonical).
PiPoly parse_pipoly(const std::string& text);

}  // namespace catsum
