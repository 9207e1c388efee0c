#include "quaddyn/heights.hpp"

#include <algorithm>
#include <stdexcept>

namespace quaddyn {

LogLinear log_abs_value(const Rat& q, const Place& v) {
    if (q == 0) throw std::domain_error("log_abs_value: q = 0");
    if (v.is_arch()) {
        Rat a = abs(q);
        return LogLinear::from_interval(Interval::log_of_rational(a));
    }
    auto val = padic_valuation(q, v.p);
    return LogLinear::log_prime(v.p, Rat(-*val));
}

LogLinear weil_height(const Rat& q) {
    if (q == 0) return LogLinear::zero();
    Int m = std::max(Int(abs(q.get_num())), q.get_den());
    if (m == 1) return LogLinear::zero();
    LogLinear h;
    for (auto& [p, e] : factor(m)) h = h + LogLinear::log_prime(p, Rat(e));
    return h;
}

LogLinear weil_height2(const Rat& c1, const Rat& c2) {
    // Finite places: only primes dividing a denominator contribute
    // log max(1,|c1|_p,|c2|_p) = max(0, -v1, -v2) * log p.
    LogLinear h;
    for (auto& p : denominator_primes(c1, c2)) {
        long v1 = c1 == 0 ? 0 : *padic_valuation(c1, p);
        long v2 = c2 == 0 ? 0 : *padic_valuation(c2, p);
        long e = std::max({0L, -v1, -v2});
        if (e > 0) h = h + LogLinear::log_prime(p, Rat(e));
    }
    Rat m = std::max({Rat(1), Rat(abs(c1)), Rat(abs(c2))});
    if (m != 1) h = h + LogLinear::log_positive_rational(m);
    return h;
}

EnergyBound h_L(const Rat& c1, const Rat& c2, const Rat& L) {
    if (L <= 1) throw std::domain_error("h_L: L must be > 1");
    LogLinear total;
    // Archimedean term, floored at L.
    Rat m_inf = std::max({L, Rat(abs(c1)), Rat(abs(c2))});
    total = total + LogLinear::log_positive_rational(m_inf);
    // p = 2 floored at 16; other denominator primes floored at 1.
    bool saw_two = false;
    for (auto& p : denominator_primes(c1, c2)) {
        long v1 = c1 == 0 ? 0 : *padic_valuation(c1, p);
        long v2 = c2 == 0 ? 0 : *padic_valuation(c2, p);
        long e = std::max(-v1, -v2);
        if (p == 2) {
            saw_two = true;
            e = std::max(e, 4L);
        } else {
            e = std::max(e, 0L);
        }
        if (e > 0) total = total + LogLinear::log_prime(p, Rat(e));
    }
    if (!saw_two) total = total + LogLinear::log_prime(2, Rat(4));

    LogLinear h = weil_height2(c1, c2);
    LogLinear cap = h + LogLinear::log_positive_rational(L) + LogLinear::log_prime(2, Rat(4));
    if (LogLinear::compare(total, h) < 0 || LogLinear::compare(total, cap) > 0)
        throw std::logic_error("h_L sandwich violated");
    EnergyBound b;
    b.lower = total;
    b.upper = total;
    b.exact = true;
    b.case_label = "h_L";
    return b;
}

}  // namespace quaddyn
