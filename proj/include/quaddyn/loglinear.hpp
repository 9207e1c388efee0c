#pragma once

// Exact values of the form sum_i q_i * log(p_i) with rational q_i and
// prime p_i, plus an optional archimedean remainder interval.  Finite-place
// energies and Weil heights of rationals live here exactly; floating
// evaluation is deferred to the last step.

#include <gmpxx.h>

#include <map>
#include <string>

#include "quaddyn/interval.hpp"
#include "quaddyn/rational.hpp"

namespace quaddyn {

class LogLinear {
public:
    LogLinear() : rem_(Interval::zero()) {}

    static LogLinear zero() { return LogLinear(); }
    static LogLinear log_prime(const Int& p, const Rat& coeff);
    // log q for q > 0, fully factored into prime terms.
    static LogLinear log_positive_rational(const Rat& q);
    static LogLinear from_interval(const Interval& iv);

    const std::map<Int, Rat>& terms() const { return terms_; }
    const Interval& remainder() const { return rem_; }

    // Exact means: no interval part, so equality and order are decidable.
    bool exact() const { return rem_.is_exact_zero(); }
    bool is_zero() const;

    LogLinear operator+(const LogLinear& o) const;
    LogLinear operator-(const LogLinear& o) const;
    LogLinear scale(const Rat& s) const;

    Interval eval(mpfr_prec_t prec = Interval::kDefaultPrec) const;

    // -1 / 0 / +1.  Exact coefficient comparison when one difference sign
    // is uniform; otherwise interval evaluation at escalating precision.
    // Throws std::runtime_error if inexact remainders keep it undecidable.
    static int compare(const LogLinear& a, const LogLinear& b);

    bool operator==(const LogLinear& o) const { return compare(*this, o) == 0; }
    bool operator<=(const LogLinear& o) const { return compare(*this, o) <= 0; }
    bool operator>=(const LogLinear& o) const { return compare(*this, o) >= 0; }

    std::string str() const;

private:
    std::map<Int, Rat> terms_;  // prime -> rational coefficient
    Interval rem_;              // archimedean remainder, [0,0] when exact
    void prune();
};

// Rigorous enclosure of a local (or adelic) energy.
struct EnergyBound {
    LogLinear lower;
    LogLinear upper;
    bool exact = false;  // lower == upper as LogLinear
    std::string case_label;

    Interval eval_lower(mpfr_prec_t prec = Interval::kDefaultPrec) const { return lower.eval(prec); }
    Interval eval_upper(mpfr_prec_t prec = Interval::kDefaultPrec) const { return upper.eval(prec); }
};

}  // namespace quaddyn
