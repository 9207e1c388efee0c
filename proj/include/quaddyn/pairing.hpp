#pragma once

// Adelic assembly of the energy pairing, canonical heights with local
// decomposition, the helpful-places partition, and the closed-form
// equidistribution bound evaluators.

#include <map>
#include <vector>

#include "quaddyn/arch.hpp"
#include "quaddyn/heights.hpp"
#include "quaddyn/nonarch.hpp"

namespace quaddyn {

struct AdelicPairingReport {
    LogLinear finite_lower;        // exact sum of local lower bounds
    LogLinear finite_upper;
    bool finite_exact = true;
    std::vector<std::pair<Int, EnergyBound>> locals;
    std::vector<Int> contributing_primes;
    MCEstimate arch;
    Interval total;                // finite part + arch mean +- 3 stderr
    double height2 = 0;            // h(c1, c2)
    double lower_thm = 0;          // alpha1 h - C1
    double upper_thm = 0;          // alpha2 h + C2
    double weak_lower = 0;         // (1/16) h(c1 - c2) - (1/16) log 2000
};

AdelicPairingReport adelic_pairing(const Rat& c1, const Rat& c2, long mc_samples,
                                   std::uint64_t seed, int workers = 1);

struct CanonicalHeightReport {
    Interval value;                      // >= 0; [0,0] on detected preperiodicity
    bool preperiodic = false;
    long iterations = 0;
    std::map<Int, LogLinear> local_finite;
    Interval local_arch;
};

// hhat_c(x) = lim 2^{-n} h(f_c^n(x)) from exact Weil heights of iterates,
// stopped when the enclosure 2^{-n} h(f^n x) +- 2^{-n} C_c has width <=
// precision, with C_c = h(c) + log 2.  Detected exact orbit repeats
// short-circuit to [0, 0].
CanonicalHeightReport canonical_height(const Rat& c, const Rat& x, double precision);

// lambda_{c,v}(x); exact at finite places on escape, an interval otherwise.
LogLinear canonical_height_local(const Rat& c, const Rat& x, const Place& v);

enum class PlaceClass { Good, Close, Bounded };

struct HelpfulPlaceEntry {
    Place place;
    LogLinear ell;
    Rat kappa;
    PlaceClass cls;
};

struct HelpfulPlacesReport {
    std::vector<HelpfulPlaceEntry> entries;  // infinity + contributing primes
    LogLinear h_L_value;
    LogLinear sum_good;
    LogLinear sum_not_close;                 // h_L minus the close places
    Interval margin_not_close;               // vs (1/3) h_L - (2/3) log 6
    Interval margin_good;                    // vs (1/3) h_L - log(16 6^{2/3} L)
    bool lemma_not_close = false;
    bool lemma_good = false;
};

HelpfulPlacesReport helpful_places_report(const Rat& c1, const Rat& c2, const Rat& L);

// (eps + 40 log(25/eps)/(N-1)) (h(c1,c2) + 1)
double equidist_upper(const Rat& c1, const Rat& c2, long N, double eps);

// 4 (delta + 3 log(1/delta)/(2(N-1))) h_L(c1,c2)
double prop_upper_with_L(const Rat& c1, const Rat& c2, long N, double delta, const Rat& L);

}  // namespace quaddyn
