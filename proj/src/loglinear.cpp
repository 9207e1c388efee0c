#include "quaddyn/loglinear.hpp"

#include <sstream>
#include <stdexcept>

namespace quaddyn {

void LogLinear::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LogLinear LogLinear::log_prime(const Int& p, const Rat& coeff) {
    if (p < 2) throw std::domain_error("LogLinear::log_prime: base < 2");
    LogLinear r;
    if (coeff != 0) r.terms_[p] = coeff;
    return r;
}

LogLinear LogLinear::log_positive_rational(const Rat& q) {
    if (sgn(q) <= 0) throw std::domain_error("log of nonpositive rational");
    LogLinear r;
    if (q.get_num() != 1)
        for (auto& [p, e] : factor(q.get_num())) r.terms_[p] += e;
    if (q.get_den() != 1)
        for (auto& [p, e] : factor(q.get_den())) r.terms_[p] -= e;
    r.prune();
    return r;
}

LogLinear LogLinear::from_interval(const Interval& iv) {
    LogLinear r;
    r.rem_ = iv;
    return r;
}

bool LogLinear::is_zero() const { return terms_.empty() && rem_.is_exact_zero(); }

LogLinear LogLinear::operator+(const LogLinear& o) const {
    LogLinear r = *this;
    for (auto& [p, c] : o.terms_) r.terms_[p] += c;
    if (!o.rem_.is_exact_zero() || !rem_.is_exact_zero()) r.rem_ = rem_ + o.rem_;
    r.prune();
    return r;
}

LogLinear LogLinear::operator-(const LogLinear& o) const {
    LogLinear r = *this;
    for (auto& [p, c] : o.terms_) r.terms_[p] -= c;
    if (!o.rem_.is_exact_zero() || !rem_.is_exact_zero()) r.rem_ = rem_ - o.rem_;
    r.prune();
    return r;
}

LogLinear LogLinear::scale(const Rat& s) const {
    LogLinear r;
    if (s != 0)
        for (auto& [p, c] : terms_) r.terms_[p] = c * s;
    if (!rem_.is_exact_zero()) r.rem_ = rem_.mul_rational(s);
    return r;
}

Interval LogLinear::eval(mpfr_prec_t prec) const {
    Interval acc = Interval::zero(prec);
    for (auto& [p, c] : terms_)
        acc = acc + Interval::log_of_integer(p, prec).mul_rational(c);
    if (!rem_.is_exact_zero()) acc = acc + rem_;
    return acc;
}

int LogLinear::compare(const LogLinear& a, const LogLinear& b) {
    LogLinear d = a - b;
    if (d.terms_.empty() && d.rem_.is_exact_zero()) return 0;
    // Uniform-sign fast path: log p > 0 for every prime p.
    bool all_nonneg = d.rem_.is_exact_zero() || mpfr_sgn(d.rem_.lo_raw()) >= 0;
    bool all_nonpos = d.rem_.is_exact_zero() || mpfr_sgn(d.rem_.hi_raw()) <= 0;
    for (auto& [p, c] : d.terms_) {
        if (sgn(c) > 0) all_nonpos = false;
        if (sgn(c) < 0) all_nonneg = false;
    }
    if (all_nonneg && !d.terms_.empty()) return 1;
    if (all_nonpos && !d.terms_.empty()) return -1;
    // Mixed signs: log p's of distinct primes are linearly independent over
    // Q, so a nonzero exact difference separates at some finite precision.
    for (mpfr_prec_t prec = 128; prec <= 1 << 14; prec *= 2) {
        Interval v = d.eval(prec);
        if (mpfr_sgn(v.lo_raw()) > 0) return 1;
        if (mpfr_sgn(v.hi_raw()) < 0) return -1;
        if (!d.rem_.is_exact_zero()) break;  // remainder width cannot shrink
    }
    if (d.rem_.is_exact_zero())
        throw std::runtime_error("LogLinear::compare: separation beyond precision cap");
    // Inexact remainder straddling 0 with no exact information left.
    if (d.terms_.empty() && mpfr_sgn(d.rem_.lo_raw()) == 0 && mpfr_sgn(d.rem_.hi_raw()) == 0)
        return 0;
    throw std::runtime_error("LogLinear::compare: undecidable with inexact remainder");
}

std::string LogLinear::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first) os << " + ";
        os << rat_str(c) << "*log(" << p.get_str() << ")";
        first = false;
    }
    if (!rem_.is_exact_zero()) {
        if (!first) os << " + ";
        os << rem_.str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace quaddyn
