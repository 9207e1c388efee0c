#pragma once

// Interval verification of the effective constant chains: the archimedean
// delta chain and the two branches of the final bound on N(c1, c2).
// All steps are outward-rounded; raising the working precision can only
// keep a verified certificate verified.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quaddyn/interval.hpp"
#include "quaddyn/rational.hpp"

namespace quaddyn {

struct Certificate {
    std::string name;
    Interval claimed;
    bool verified = false;
    std::vector<std::pair<std::string, Interval>> trace;
};

// delta = 10^-75 chain: the close-at-most-places branch via the weak
// pairing bound, and the spread branch via the close-parameter lower bound
// with H = 2001^{100/99}, M = 9H^2.
Certificate delta_certificate(mpfr_prec_t prec = 256);

// Final-bound chain: N < 281857 when h(c1,c2) > 139, and N < 10^82
// overall, with alpha1 = 1/192, C1 = 3/17, delta = 10^-75.
Certificate b_certificate(mpfr_prec_t prec = 256);

// Single source of truth for the named constants, exact as rationals.
const std::map<std::string, Rat>& constants_table();

}  // namespace quaddyn
