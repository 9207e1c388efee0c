#pragma once

// Outward-rounded real intervals on top of MPFR.  Every operation rounds
// the lower endpoint down and the upper endpoint up, so the true real
// result of a computation on enclosed inputs is always enclosed.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace quaddyn {

class Interval {
public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    explicit Interval(mpfr_prec_t prec = kDefaultPrec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval zero(mpfr_prec_t prec = kDefaultPrec);
    // Exact double endpoints (doubles are representable in any prec >= 53).
    static Interval from_double(double x, mpfr_prec_t prec = kDefaultPrec);
    static Interval hull(double lo, double hi, mpfr_prec_t prec = kDefaultPrec);
    static Interval from_rational(const mpq_class& q, mpfr_prec_t prec = kDefaultPrec);
    static Interval from_integer(const mpz_class& n, mpfr_prec_t prec = kDefaultPrec);
    static Interval log_of_rational(const mpq_class& q, mpfr_prec_t prec = kDefaultPrec);
    static Interval log_of_integer(const mpz_class& n, mpfr_prec_t prec = kDefaultPrec);

    mpfr_prec_t prec() const { return prec_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // throws if 0 in divisor

    Interval add_rational(const mpq_class& q) const;
    Interval mul_rational(const mpq_class& q) const;

    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval sqrt() const;  // requires lo >= 0
    // x^e for x with lo > 0 and rational exponent e, via exp(e*log x).
    Interval pow_rational(const mpq_class& e) const;
    Interval abs() const;

    static Interval min(const Interval& a, const Interval& b);
    static Interval max(const Interval& a, const Interval& b);

    // Smallest double <= lo, smallest representable bounds.
    double lo_d() const;
    double hi_d() const;
    double mid_d() const;
    double width_d() const;

    bool contains_zero() const;
    bool contains(const mpq_class& q) const;
    bool is_exact_zero() const;
    // True only when the comparison holds for every pair of enclosed values.
    bool certainly_lt(const Interval& o) const;
    bool certainly_le(const Interval& o) const;
    bool certainly_gt(const mpq_class& q) const;
    bool certainly_ge(const mpq_class& q) const;
    bool certainly_lt(const mpq_class& q) const;
    bool certainly_le(const mpq_class& q) const;

    std::string str(size_t digits = 17) const;

    // Raw endpoint access for the few call sites that need mpfr directly.
    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    mpfr_t& lo_raw() { return lo_; }
    mpfr_t& hi_raw() { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

}  // namespace quaddyn
