#include "quaddyn/nonarch.hpp"

#include <stdexcept>

namespace quaddyn {

namespace {

// log_p of |q|_p as a long, i.e. -v_p(q); 0 for q = 0 by convention here
// (only ever used through the |q|_p > 1 predicate, which 0 fails).
long log_norm(const Rat& q, const Int& p) {
    if (q == 0) return 0;
    return -*padic_valuation(q, p);
}

EnergyBound make_exact(const Int& p, const Rat& coeff, const std::string& label) {
    EnergyBound b;
    b.lower = LogLinear::log_prime(p, coeff);
    b.upper = b.lower;
    b.exact = true;
    b.case_label = label;
    return b;
}

EnergyBound make_range(const Int& p, const Rat& lo, const Rat& hi, const std::string& label) {
    EnergyBound b;
    b.lower = LogLinear::log_prime(p, lo);
    b.upper = LogLinear::log_prime(p, hi);
    b.exact = false;
    b.case_label = label;
    return b;
}

}  // namespace

std::string JuliaClassification::kind_str() const {
    switch (kind) {
        case JuliaKind::GoodReduction: return "good_reduction";
        case JuliaKind::PotentialGoodReduction: return "potential_good_reduction";
        case JuliaKind::CantorOnCircle: return "cantor_on_circle";
    }
    return "?";
}

JuliaClassification julia_classify(const Rat& c, const Int& p) {
    Place v = Place::finite(p);
    long e = log_norm(c, p);
    if (e <= 0) return {v, JuliaKind::GoodReduction, LogLinear::zero()};
    if (p == 2 && e <= 2) return {v, JuliaKind::PotentialGoodReduction, LogLinear::zero()};
    return {v, JuliaKind::CantorOnCircle, LogLinear::log_prime(p, ratq(e, 2))};
}

PadicEscapeValue escape_rate_padic(const Rat& c, const Rat& x, const Int& p, int cap) {
    if (cap < 1) throw std::domain_error("escape_rate_padic: cap must be >= 1");
    Place::finite(p);  // validate
    PadicEscapeValue out;
    long ec = std::max(0L, log_norm(c, p));  // log_p max(1, |c|)

    // |x| above the threshold max(1, |c|^{1/2}): strict doubling from step 0.
    if (x != 0) {
        long lx = log_norm(x, p);
        if (2 * lx > ec) {
            out.escaped = true;
            out.iterations = 0;
            out.lower = out.upper = LogLinear::log_prime(p, Rat(lx));
            return out;
        }
    }
    if (ec == 0) {
        // Good reduction and |x|_p <= 1: the orbit stays in the unit disk.
        out.escaped = false;
        out.iterations = 0;
        return out;
    }

    Rat y = x;
    const size_t size_cap = size_t(1) << 22;  // bits; exact orbits square each step
    long n = 0;
    for (n = 1; n <= cap; n++) {
        y = y * y + c;
        if (y != 0) {
            long ly = log_norm(y, p);
            if (2 * ly > ec) {
                out.escaped = true;
                out.iterations = n;
                Rat coeff = Rat(ly) / Rat(Int(1) << n);
                out.lower = out.upper = LogLinear::log_prime(p, coeff);
                return out;
            }
        }
        size_t bits = mpz_sizeinbase(y.get_num().get_mpz_t(), 2) +
                      mpz_sizeinbase(y.get_den().get_mpz_t(), 2);
        if (bits > size_cap) break;
    }
    long n_eff = std::min<long>(n, cap);
    out.escaped = false;
    out.iterations = n_eff;
    out.lower = LogLinear::zero();
    out.upper = LogLinear::log_prime(p, Rat(ec) / (Rat(2) * Rat(Int(1) << n_eff)));
    return out;
}

EnergyBound local_energy_padic(const Rat& c1, const Rat& c2, const Int& p) {
    Place::finite(p);
    if (c1 == c2) return make_exact(p, Rat(0), "diagonal");

    long e1 = log_norm(c1, p), e2 = log_norm(c2, p);
    bool big1 = c1 != 0 && e1 > 0, big2 = c2 != 0 && e2 > 0;
    if (!big1 && !big2) return make_exact(p, Rat(0), "good_reduction");
    if (!big1 || !big2 || e1 != e2) {
        long e = std::max(big1 ? e1 : 0, big2 ? e2 : 0);
        return make_exact(p, ratq(e, 2), "distinct_norms");
    }

    // Equal norms r = p^m > 1; everything is decided by a = log_p |c1-c2|.
    long m = e1;
    long a = log_norm(c1 - c2, p);
    if (a > m) throw std::logic_error("local_energy_padic: ultrametric violation");

    if (p != 2) {
        if (2 * a > m) return make_exact(p, ratq(a, 2), "pne2_case1");
        if (2 * a == m) return make_range(p, ratq(m, 8), ratq(m, 2), "pne2_case2");
        if (a > 0) return make_exact(p, ratq(m + 2 * a, 8), "pne2_case3");
        if (a == 0) return make_range(p, ratq(m, 16), ratq(m, 2), "pne2_case4");
        if (2 * a > -m) return make_exact(p, ratq(m + a, 8), "pne2_case5");
        return make_range(p, Rat(0), ratq(m, 2), "pne2_deep_overlap");
    }

    // p = 2.  For 1 < r <= 16 only the theorem sandwich is available.
    if (m <= 4) return make_range(p, ratq(std::max(a, 0L), 16), ratq(m, 2), "p2_small_r");
    if (2 * a > m - 2) return make_exact(p, ratq(a, 2), "p2_case12");
    if (2 * a == m - 2) return make_range(p, ratq(m - 3, 8), ratq(m, 2), "p2_case3");
    if (a > 0) return make_exact(p, ratq(2 * a + m - 2, 8), "p2_case4");
    if (a == 0) return make_range(p, ratq(m - 3, 16), ratq(m, 2), "p2_case5");
    if (2 * a > 2 - m) return make_exact(p, ratq(a + m - 2, 8), "p2_case6");
    return make_range(p, Rat(0), ratq(m, 2), "p2_deep_overlap");
}

PadicEpsilonBound padic_epsilon_bound(const Rat& c, const Int& p, const Rat& r) {
    Place::finite(p);
    PadicEpsilonBound out;
    if (p != 2) {
        if (r <= 0 || r >= 1)
            throw std::domain_error("padic_epsilon_bound: need 0 < r < 1 for p != 2");
        long ec = log_norm(c, p);
        if (c == 0 || ec <= 0) {
            // lambda vanishes on the unit disk; radius 1.
            return out;
        }
        out.bound = LogLinear::log_prime(p, r * ec);
        Interval log_inv_r = Interval::log_of_rational(Rat(1) / r);
        Interval log_c = LogLinear::log_prime(p, Rat(ec)).eval();
        out.log_radius = LogLinear::from_interval(-(log_inv_r * log_c));
        return out;
    }
    if (r <= 0 || r * 4 >= 1)
        throw std::domain_error("padic_epsilon_bound: need 0 < r < 1/4 for p = 2");
    long ec = std::max(log_norm(c, p), 4L);  // max{|c|_2, 16} in log_2 form
    out.bound = LogLinear::log_prime(p, r * ec);
    Interval log_inv_r = Interval::log_of_rational(Rat(1) / r);
    Interval log_k = LogLinear::log_prime(p, Rat(ec)).eval();
    out.log_radius = LogLinear::from_interval(-(log_inv_r * log_k));
    return out;
}

Disjointness filled_julia_disjoint_at_p(const Rat& c1, const Rat& c2, const Int& p) {
    Place::finite(p);
    long e1 = log_norm(c1, p), e2 = log_norm(c2, p);
    bool big1 = c1 != 0 && e1 > 0, big2 = c2 != 0 && e2 > 0;
    // |c|_p <= 1: K_c is the closed unit disk.  |c|_p > 1: K_c lies on the
    // circle |z| = |c|_p^{1/2}.  Distinct shells cannot meet.
    if (big1 != big2) return Disjointness::Disjoint;
    if (big1 && big2 && e1 != e2) return Disjointness::Disjoint;
    return Disjointness::NotDetermined;
}

}  // namespace quaddyn
