#pragma once

// Logarithmic Weil heights on Q and A^2(Q), local absolute values in log
// form, and the auxiliary height h_L.  Everything finite-place is exact.

#include "quaddyn/loglinear.hpp"
#include "quaddyn/rational.hpp"

namespace quaddyn {

// log|q|_v as a LogLinear: exact -v_p(q)*log p at finite places, an
// interval remainder at the archimedean place.  q must be nonzero.
LogLinear log_abs_value(const Rat& q, const Place& v);

// h(q) = log max(|num|, |den|), exact.
LogLinear weil_height(const Rat& q);

// h(c1, c2) = sum_v log max(1, |c1|_v, |c2|_v), exact.
LogLinear weil_height2(const Rat& c1, const Rat& c2);

// Auxiliary height h_L: the archimedean term is floored at L, the term at
// p = 2 is floored at 16, other finite terms at 1.  Requires L > 1.
// Exact, with the sandwich h <= h_L <= h + log L + log 16 asserted.
EnergyBound h_L(const Rat& c1, const Rat& c2, const Rat& L);

}  // namespace quaddyn
