#pragma once

// Preperiodicity of rational points and common preperiodic points of two
// quadratic polynomials within a search bound.

#include <vector>

#include "quaddyn/polyq.hpp"
#include "quaddyn/rational.hpp"

namespace quaddyn {

// Exact orbit test: true iff the forward orbit of x under z^2 + c repeats.
// A non-repeating orbit is abandoned (false) once its height passes
// h(c) + log 21 > h(c) + 3, which certifies positive canonical height.
bool is_preperiodic(const Rat& c, const Rat& x);

struct PreperReport {
    int bound = 0;
    long distinct_common_count = 0;           // roots in Qbar, excluding infinity
    std::vector<Rat> rational_points;
    long include_infinity_total = 1;
    PolyQ accumulator;                        // lcm of the pairwise gcds
};

// For all (m,n), (k,l) with m+n <= bound, k+l <= bound, accumulates
// lcm of gcd(P_{m,n}(c1), P_{k,l}(c2)); counts come from the squarefree
// degree, rational points from the rational roots.
PreperReport common_preper(const Rat& c1, const Rat& c2, int bound);

// Independent numeric verification (bound <= 4): complex roots of every
// preperiodicity polynomial, matched between the parameters within 1e-8.
long common_preper_oracle(const Rat& c1, const Rat& c2, int bound);

}  // namespace quaddyn
