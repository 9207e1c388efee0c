#pragma once

// Archimedean dynamics in double precision: escape rates with an explicit
// tail bound, inverse-iteration sampling of the equilibrium measure, the
// Monte-Carlo energy E_inf(c1,c2), and the distortion/escape-disk battery.
// Doubles carry the dynamics; a conservative 1e-9 slack absorbs rounding
// wherever a rigorous comparison is made.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quaddyn/interval.hpp"

namespace quaddyn {

using Cx = std::complex<double>;

struct EscapeValue {
    Interval value;  // natural-log units, lo >= 0
    bool escaped = false;
    int iterations_used = 0;
};

// Fast all-double core used by the samplers; [lo, hi] encloses lambda_c(z)
// up to the documented double-rounding slack.
struct EscCore {
    double lo = 0, hi = 0;
    bool escaped = false;
    int iterations = 0;
    double mid() const { return 0.5 * (lo + hi); }
    double halfwidth() const { return 0.5 * (hi - lo); }
};

EscCore escape_rate_core(Cx c, Cx z, double tol, int cap);

// Enclosure of lambda_c(z) of width <= max(tol, 4e-9) when the orbit
// escapes the radius R(c) = max(2,|c|)+1 within the cap; otherwise
// [0, 2^{-cap} log(R(c)+1)].
EscapeValue escape_rate_arch(Cx c, Cx z, double tol, int cap = 1024);

// Random backward orbits z <- +-sqrt(z - c) with fair sign choices.
std::vector<Cx> sample_equilibrium(Cx c, long count, long burn_in = 64,
                                   std::uint64_t seed = 42);

struct MCEstimate {
    double mean = 0;
    double std_err = 0;         // batch-means standard error
    double mean_halfwidth = 0;  // average lambda-enclosure half-width
    long samples = 0;
    std::uint64_t seed = 0;
};

// Symmetric estimator of E_inf(c1, c2): lambda_{c1} averaged over
// mu_{c2}-samples and vice versa.  Deterministic for fixed
// (seed, samples, workers): each worker owns a derived RNG stream and
// partial results merge in worker-index order.
MCEstimate arch_energy_mc(Cx c1, Cx c2, long samples, std::uint64_t seed, int workers = 1);

// One direction only: mean of lambda_{c_eval} over mu_{c_sample}.
MCEstimate arch_energy_mc_one_sided(Cx c_eval, Cx c_sample, long samples,
                                    std::uint64_t seed, int workers = 1);

// Deterministic quadrature of E_inf(0, c) = (1/2pi) int lambda_c(e^{i t}) dt,
// with a quadrature-plus-lambda error budget.
Interval energy_circle_oracle(Cx c, long nodes);

struct ArchBounds {
    double lower = 0;       // (1/16) log+ |c1-c2| - (1/16) log 2000
    double upper = 0;       // (1/2) log+ max{|c1|,|c2|} + log 8
    std::optional<double> strong_lower;  // (1/64) log max, when applicable
};

ArchBounds arch_bounds_thm(Cx c1, Cx c2);

struct ArchEpsilonBound {
    double radius = 0;  // max{|c|, L}^{-3 log(1/r)}
    double bound = 0;   // r log max{|c|, L}
};

ArchEpsilonBound arch_epsilon_bound(Cx c, double r, double L);

// E_inf(c1,c2) >= |c1-c2|^2/(32 s^4) - (117/100) M^3/s^6 for
// max{|c1|,|c2|} <= M, M >= 1000, s >= M^2.
double prop92_lower(Cx c1, Cx c2, double M, double s);

struct BatteryClaim {
    std::string claim;
    double observed = 0;
    double bound = 0;
    double sigma = 0;
    bool pass = false;
};

struct BatteryReport {
    std::vector<BatteryClaim> claims;
    bool all_pass = true;
};

// Statistical checks of the escape-disk measures (levels 1..3), the escape
// lower bounds outside the disks, and the shrinking-rate upper bounds near
// the Julia set.  Requires |c| >= 25.
BatteryReport distortion_battery(Cx c, long samples, std::uint64_t seed);

}  // namespace quaddyn
