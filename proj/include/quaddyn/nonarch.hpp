#pragma once

// p-adic dynamics for rational parameters: Julia-set classification, exact
// escape rates, and the local energies E_p = int lambda_{c1,p} dmu_{c2,p}.
// The dispatch depends only on the three valuations v_p(c1), v_p(c2),
// v_p(c1-c2); branches the theory resolves only up to residue-disk overlap
// return honest enclosures with exact=false.

#include <string>

#include "quaddyn/loglinear.hpp"
#include "quaddyn/rational.hpp"

namespace quaddyn {

enum class JuliaKind { GoodReduction, PotentialGoodReduction, CantorOnCircle };

struct JuliaClassification {
    Place place;
    JuliaKind kind;
    LogLinear circle_log_radius;  // (1/2) log|c|_p, Cantor case only

    std::string kind_str() const;
};

JuliaClassification julia_classify(const Rat& c, const Int& p);

struct PadicEscapeValue {
    bool escaped = false;
    long iterations = 0;
    LogLinear lower;  // == upper (exact) when escaped
    LogLinear upper;

    bool exact() const { return escaped || upper.is_zero(); }
};

// Exact escape rate lambda_{c,p}(x).  Escapes are detected exactly; a
// bounded orbit after `cap` exact steps yields the certified enclosure
// [0, 2^{-cap} * (1/2) log+ |c|_p].
PadicEscapeValue escape_rate_padic(const Rat& c, const Rat& x, const Int& p, int cap = 24);

// E_p(c1, c2) per the p != 2 and p = 2 case tables.
EnergyBound local_energy_padic(const Rat& c1, const Rat& c2, const Int& p);

struct PadicEpsilonBound {
    LogLinear log_radius;  // log of the neighborhood radius (interval part)
    LogLinear bound;       // escape-rate bound, exact
};

// lambda_{c,p} <= r log|c|_p within |c|_p^{-log(1/r)} of J_c (p != 2,
// 0 < r < 1); for p = 2 the bound is r log max{|c|_2, 16} and r < 1/4.
PadicEpsilonBound padic_epsilon_bound(const Rat& c, const Int& p, const Rat& r);

enum class Disjointness { Disjoint, NotDetermined };

// Whether valuations alone force the filled Julia sets at p apart.
Disjointness filled_julia_disjoint_at_p(const Rat& c1, const Rat& c2, const Int& p);

}  // namespace quaddyn
