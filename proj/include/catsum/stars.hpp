#pragma once

#include <utility>

#include "catsum/algebra.hpp"
#include "catsum/engine.hpp"
#include "catsum/tree.hpp"

namespace catsum {

struct StarValue {
    long s = 0;
    PiPoly value;
};

// Centre vertex with s leaves.
PlainTree star_tree(long s);

// S(star_s)(1/4). Closed formula for s >= 3, the engine below that.
PiPoly star_eval(long s);
PiPoly star_eval(long s, Engine& engine);

// Residuals of the homogeneous and inhomogeneous A_s recurrences.
std::pair<PiPoly, PiPoly> star_recurrence_residual(long s);

Rational star_B(long s);
Rational star_C(long s);
// B_s*H1 - C_s*H2 at t = 1/4; equals star_eval(s + 3).
PiPoly star_eval_crosscheck_BC(long s);

// sum_{n < terms} Cat_n [t^n]C(t)^s / 16^n
Rational star_3f2_partial(long s, long terms);

}  // namespace catsum
