#include "quaddyn/pairing.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "quaddyn/audit.hpp"

namespace quaddyn {

AdelicPairingReport adelic_pairing(const Rat& c1, const Rat& c2, long mc_samples,
                                   std::uint64_t seed, int workers) {
    AdelicPairingReport rep;
    rep.contributing_primes = denominator_primes(c1, c2);
    for (auto& p : rep.contributing_primes) {
        EnergyBound e = local_energy_padic(c1, c2, p);
        rep.finite_lower = rep.finite_lower + e.lower;
        rep.finite_upper = rep.finite_upper + e.upper;
        rep.finite_exact = rep.finite_exact && e.exact;
        rep.locals.emplace_back(p, std::move(e));
    }
    rep.arch = arch_energy_mc(Cx(c1.get_d(), 0), Cx(c2.get_d(), 0), mc_samples, seed, workers);

    Interval finite_iv = Interval::hull(rep.finite_lower.eval().lo_d(),
                                        rep.finite_upper.eval().hi_d());
    double pad = 3 * rep.arch.std_err + rep.arch.mean_halfwidth;
    Interval arch_iv = Interval::hull(rep.arch.mean - pad, rep.arch.mean + pad);
    rep.total = finite_iv + arch_iv;

    const auto& C = constants_table();
    rep.height2 = weil_height2(c1, c2).eval().mid_d();
    rep.lower_thm = C.at("alpha1").get_d() * rep.height2 - C.at("C1").get_d();
    rep.upper_thm = C.at("alpha2").get_d() * rep.height2 + C.at("C2").get_d();
    double hdiff = c1 == c2 ? 0.0 : weil_height(c1 - c2).eval().mid_d();
    rep.weak_lower = hdiff / 16.0 - std::log(2000.0) / 16.0;
    return rep;
}

namespace {

// Certified non-preperiodicity threshold, shared with preper:
// h(y) > h(c) + log 21 > h(c) + 3 implies hhat(y) > 0.
Int growth_limit(const Rat& c) { return 21 * std::max(Int(abs(c.get_num())), c.get_den()); }

// hhat_c(x) = lim 2^{-n} h(f^n x) and h decomposes into local terms
// log+ |.|_v supported on infinity and the primes dividing den(x) den(c).
// Each place is tracked until its orbit certifiably escapes there, at
// which point its limit contribution is an exact closed form (the local
// absolute value doubles exactly from then on).  Places still bounded at
// the stopping step contribute [0, 2^{-(j+1)} cap_v].

// Fixed-precision Z_p tracker: y = p^val * unit with unit known mod p^krem.
struct PadicTracker {
    Int p;
    long ec;        // log_p max(1, |c|_p)
    long vc;        // v_p(c); only meaningful when c != 0
    Int uc_mod;     // unit part of c mod p^k0
    bool c_zero;
    long val;
    Int unit;       // 0 encodes y = 0 exactly
    long krem;
    Int pk;         // p^krem
    bool dead = false;
    long frozen_at = 0;  // last step with reliable data once dead

    bool escaped() const { return !dead && unit != 0 && -2 * val > ec; }

    void step(long cur_step) {
        if (dead) return;
        if (unit == 0) {  // y = 0 -> y' = c
            if (c_zero) return;
            val = vc;
            unit = uc_mod % pk;
            return;
        }
        long v2 = 2 * val;
        Int u2 = unit * unit % pk;
        if (c_zero) {
            val = v2;
            unit = u2;
            return;
        }
        if (v2 < vc) {
            Int shift;
            mpz_pow_ui(shift.get_mpz_t(), p.get_mpz_t(), (unsigned long)(vc - v2));
            val = v2;
            unit = (u2 + uc_mod * shift) % pk;
        } else if (v2 > vc) {
            Int shift;
            mpz_pow_ui(shift.get_mpz_t(), p.get_mpz_t(), (unsigned long)(v2 - vc));
            val = vc;
            unit = (uc_mod + u2 * shift) % pk;
        } else {
            Int s = (u2 + uc_mod) % pk;
            if (s == 0) {  // cancellation beyond the working precision
                dead = true;
                frozen_at = cur_step;
                return;
            }
            Int rest;
            long d = (long)mpz_remove(rest.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
            if (d >= krem - 4) {
                dead = true;
                frozen_at = cur_step;
                return;
            }
            val = v2 + d;
            krem -= d;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), (unsigned long)krem);
            unit = rest % pk;
        }
    }
};

PadicTracker make_padic_tracker(const Rat& y, const Rat& c, const Int& p, long digits) {
    PadicTracker t;
    t.p = p;
    t.c_zero = c == 0;
    long ecraw = t.c_zero ? 0 : -*padic_valuation(c, p);
    t.ec = std::max(0L, ecraw);
    t.krem = digits;
    mpz_pow_ui(t.pk.get_mpz_t(), p.get_mpz_t(), (unsigned long)t.krem);
    if (!t.c_zero) {
        t.vc = *padic_valuation(c, p);
        Int cn = c.get_num(), cd = c.get_den();
        mpz_remove(cn.get_mpz_t(), cn.get_mpz_t(), p.get_mpz_t());
        mpz_remove(cd.get_mpz_t(), cd.get_mpz_t(), p.get_mpz_t());
        Int inv;
        mpz_invert(inv.get_mpz_t(), cd.get_mpz_t(), t.pk.get_mpz_t());
        t.uc_mod = (cn % t.pk * inv) % t.pk;
        if (t.uc_mod < 0) t.uc_mod += t.pk;
    } else {
        t.vc = 0;
    }
    if (y == 0) {
        t.val = 0;
        t.unit = 0;
    } else {
        t.val = *padic_valuation(y, p);
        Int yn = y.get_num(), yd = y.get_den();
        mpz_remove(yn.get_mpz_t(), yn.get_mpz_t(), p.get_mpz_t());
        mpz_remove(yd.get_mpz_t(), yd.get_mpz_t(), p.get_mpz_t());
        Int inv;
        mpz_invert(inv.get_mpz_t(), yd.get_mpz_t(), t.pk.get_mpz_t());
        t.unit = (yn % t.pk * inv) % t.pk;
        if (t.unit < 0) t.unit += t.pk;
        if (t.unit == 0) t.dead = true;  // cannot represent: precision too low
    }
    return t;
}

// Real-interval tracker for the archimedean place.
struct ArchTracker {
    Interval y;
    Rat c;
    Rat radius;  // escape radius R = max(2, |c|) + 1
    bool dead = false;
    long frozen_at = 0;

    bool escaped() const {
        return !dead && (y.certainly_gt(radius) || y.certainly_lt(-radius));
    }

    void step(long cur_step) {
        if (dead) return;
        y = (y * y).add_rational(c);
        double w = y.width_d();
        if (!(w < 1e290) && !escaped()) {
            dead = true;  // interval lost the orbit
            frozen_at = cur_step;
        }
    }
};

// Exact lock value for an escaped archimedean orbit at step j:
// lambda = 2^{-j} log|y_j| + sum_{i>=j} 2^{-(i+1)} log|1 + c/y_i^2|.
Interval arch_lock_value(ArchTracker t, long j, mpfr_prec_t prec) {
    Interval absy = t.y.abs();
    Interval lam = absy.log().mul_rational(ratq(1, Int(1) << j));
    Rat scale(1, Int(1) << j);
    Interval y = t.y;
    for (int i = 0;; i++) {
        Interval y2 = y * y;
        Interval w = Interval::from_rational(Rat(abs(t.c)), prec) / y2.abs();
        double whi = w.hi_d();
        double rem = whi / (1.0 - whi) * (8.0 / 7.0);
        Rat half(1, 2);
        scale = scale * half;
        if (rem * scale.get_d() < 1e-40 || i >= 64) {
            Interval tail = Interval::hull(-rem, rem).mul_rational(scale);
            lam = lam + tail;
            break;
        }
        Interval term = (Interval::from_rational(t.c, prec) / y2).add_rational(Rat(1));
        lam = lam + term.abs().log().mul_rational(scale);
        y = y2.add_rational(t.c);
    }
    return lam;
}

}  // namespace

CanonicalHeightReport canonical_height(const Rat& c, const Rat& x, double precision) {
    if (!(precision > 0)) throw std::domain_error("canonical_height: precision must be > 0");
    CanonicalHeightReport rep;

    // One-step height distortion constant C_c = h(c) + log 2; its caps per
    // place bound the contribution of an orbit still bounded at step j.
    Interval cc = weil_height(c).eval() + Interval::log_of_integer(2);
    const double cc_hi = cc.hi_d();

    const Rat rad = std::max(Rat(2), Rat(abs(c))) + 1;
    const double cap_arch = 2.0 * std::log(std::max(2.0, rad.get_d())) + 2.0 * std::log(2.0);

    std::vector<Int> primes = denominator_primes(c, x);
    std::vector<double> cap_fin;
    for (auto& p : primes) {
        long ec = std::max(0L, c == 0 ? 0 : -*padic_valuation(c, p));
        long ex = std::max(0L, x == 0 ? 0 : -*padic_valuation(x, p));
        (void)ex;
        cap_fin.push_back((double)ec * std::log(p.get_d()));
    }

    long j_max = 20;
    {
        double total0 = cap_arch + 2.0 * cc_hi + 1.0;
        for (double f : cap_fin) total0 += f;
        while (std::ldexp(total0, -(int)j_max) > 0.25 * precision && j_max < 300) j_max++;
    }
    mpfr_prec_t prec = (mpfr_prec_t)(256 + j_max * (4 + std::max(0.0, std::log2(rad.get_d()))));

    // Locked contributions.
    LogLinear finite_exact_sum;
    Interval arch_sum = Interval::zero(prec);
    bool arch_locked = false;
    std::vector<bool> fin_locked(primes.size(), false);
    std::map<Int, LogLinear> local_out;

    // Phase A: exact reduced orbit with cycle detection.
    std::set<Rat> seen;
    Rat y = x;
    Int limit = growth_limit(c);
    long j = 0;
    bool small_phase = true;
    ArchTracker arch;
    arch.c = c;
    arch.radius = rad;
    std::vector<PadicTracker> padic(primes.size());

    auto lock_checks_exact = [&](const Rat& val, long step) {
        for (size_t i = 0; i < primes.size(); i++) {
            if (fin_locked[i]) continue;
            long ec = std::max(0L, c == 0 ? 0 : -*padic_valuation(c, primes[i]));
            long lv = val == 0 ? 0 : -*padic_valuation(val, primes[i]);
            if (val != 0 && 2 * lv > ec) {
                Rat coeff = Rat(lv) / Rat(Int(1) << step);
                LogLinear ll = LogLinear::log_prime(primes[i], coeff);
                finite_exact_sum = finite_exact_sum + ll;
                local_out[primes[i]] = ll;
                fin_locked[i] = true;
            }
        }
        if (!arch_locked) {
            Rat a = abs(val);
            if (a > rad) {
                ArchTracker t;
                t.y = Interval::from_rational(val, prec);
                t.c = c;
                t.radius = rad;
                Interval lam = arch_lock_value(t, step, prec);
                arch_sum = lam;
                arch_locked = true;
            }
        }
    };

    bool all_locked = false;
    while (j < j_max) {
        if (small_phase) {
            if (!seen.insert(y).second) {
                rep.preperiodic = true;
                rep.value = Interval::zero();
                rep.local_arch = Interval::zero();
                rep.iterations = j;
                for (auto& p : primes) rep.local_finite[p] = LogLinear::zero();
                return rep;
            }
            lock_checks_exact(y, j);
            size_t bits = mpz_sizeinbase(y.get_num().get_mpz_t(), 2) +
                          mpz_sizeinbase(y.get_den().get_mpz_t(), 2);
            bool over_limit = std::max(Int(abs(y.get_num())), y.get_den()) > limit;
            if (bits > 4096 || j >= 200 || (over_limit && bits > 512)) {
                // Switch every still-active place to its local tracker.
                small_phase = false;
                for (size_t i = 0; i < primes.size(); i++)
                    if (!fin_locked[i])
                        padic[i] = make_padic_tracker(y, c, primes[i], 192);
                if (!arch_locked) arch.y = Interval::from_rational(y, prec);
            } else {
                y = y * y + c;
                j++;
                continue;
            }
        }
        // Phase B: local trackers only.
        bool any_active = !arch_locked && !arch.dead;
        for (size_t i = 0; i < primes.size(); i++)
            if (!fin_locked[i] && !padic[i].dead) any_active = true;
        if (!any_active) {
            all_locked = arch_locked;
            for (size_t i = 0; i < primes.size(); i++) all_locked = all_locked && fin_locked[i];
            break;
        }
        for (size_t i = 0; i < primes.size(); i++) {
            if (fin_locked[i] || padic[i].dead) continue;
            if (padic[i].escaped()) {
                Rat coeff = Rat(-padic[i].val) / Rat(Int(1) << j);
                LogLinear ll = LogLinear::log_prime(primes[i], coeff);
                finite_exact_sum = finite_exact_sum + ll;
                local_out[primes[i]] = ll;
                fin_locked[i] = true;
            }
        }
        if (!arch_locked && !arch.dead && arch.escaped()) {
            arch_sum = arch_lock_value(arch, j, prec);
            arch_locked = true;
        }
        bool done = arch_locked;
        for (size_t i = 0; i < primes.size(); i++) done = done && fin_locked[i];
        if (done) {
            all_locked = true;
            break;
        }
        for (size_t i = 0; i < primes.size(); i++)
            if (!fin_locked[i]) padic[i].step(j);
        if (!arch_locked) arch.step(j);
        j++;
    }
    (void)all_locked;

    // Assemble the enclosure: locked parts are exact (or tight intervals);
    // each still-active place contributes [0, 2^{-(j+1)} cap_v].
    Interval value = arch_locked ? arch_sum : Interval::zero(prec);
    value = value + finite_exact_sum.eval(prec);
    double slack_hi = 0;
    if (!arch_locked) {
        long m = arch.dead ? arch.frozen_at : j;
        slack_hi += std::ldexp(cap_arch, -(int)(m + 1));
    }
    for (size_t i = 0; i < primes.size(); i++)
        if (!fin_locked[i]) {
            long m = padic[i].dead ? padic[i].frozen_at : j;
            slack_hi += std::ldexp(cap_fin[i], -(int)(m + 1));
        }
    value = value + Interval::hull(0.0, slack_hi);
    rep.value = Interval::max(value, Interval::zero());
    rep.iterations = j;

    for (size_t i = 0; i < primes.size(); i++)
        if (!local_out.count(primes[i])) {
            long m = padic[i].dead ? padic[i].frozen_at : j;
            double hi = std::ldexp(cap_fin[i], -(int)(m + 1));
            local_out[primes[i]] = LogLinear::from_interval(Interval::hull(0.0, hi));
        }
    rep.local_finite = local_out;
    long m_arch = arch.dead ? arch.frozen_at : j;
    rep.local_arch = arch_locked
                         ? arch_sum
                         : Interval::hull(0.0, std::ldexp(cap_arch, -(int)(m_arch + 1)));
    return rep;
}

LogLinear canonical_height_local(const Rat& c, const Rat& x, const Place& v) {
    if (v.is_arch()) {
        EscCore e = escape_rate_core(Cx(c.get_d(), 0), Cx(x.get_d(), 0), 1e-9, 64);
        return LogLinear::from_interval(Interval::hull(e.lo, e.hi));
    }
    PadicEscapeValue e = escape_rate_padic(c, x, v.p, 24);
    if (e.exact()) return e.upper;
    return LogLinear::from_interval(Interval::hull(e.lower.eval().lo_d(), e.upper.eval().hi_d()));
}

HelpfulPlacesReport helpful_places_report(const Rat& c1, const Rat& c2, const Rat& L) {
    if (c1 == c2) throw std::domain_error("helpful_places_report: c1 = c2");
    if (L < 1000) throw std::domain_error("helpful_places_report: L must be >= 1000");
    HelpfulPlacesReport rep;
    Rat diff = c1 - c2;

    // Archimedean entry: ell = log max(|c1|, |c2|, L), large iff the max
    // beats the floor, helpful iff |c1-c2| > 3 e^{-ell/2} i.e. diff^2 > 9/M.
    {
        Rat m = std::max({L, Rat(abs(c1)), Rat(abs(c2))});
        HelpfulPlaceEntry e;
        e.place = Place::archimedean();
        e.ell = LogLinear::log_positive_rational(m);
        e.kappa = constants_table().at("kappa_arch");
        bool large = m > L;
        if (!large)
            e.cls = PlaceClass::Bounded;
        else
            e.cls = diff * diff > Rat(9) / m ? PlaceClass::Good : PlaceClass::Close;
        rep.entries.push_back(e);
    }

    bool saw_two = false;
    for (auto& p : denominator_primes(c1, c2)) {
        long v1 = c1 == 0 ? 0 : *padic_valuation(c1, p);
        long v2 = c2 == 0 ? 0 : *padic_valuation(c2, p);
        long ep = std::max({0L, -v1, -v2});
        long a = -*padic_valuation(diff, p);
        HelpfulPlaceEntry e;
        e.place = Place::finite(p);
        if (p == 2) {
            saw_two = true;
            e.kappa = constants_table().at("kappa_two");
            long floored = std::max(ep, 4L);
            e.ell = LogLinear::log_prime(p, Rat(floored));
            bool large = ep > 4;
            // helpful iff |c1-c2|_2 > 2 e^{-ell/2}: 2a > 2 - ep.
            if (!large)
                e.cls = PlaceClass::Bounded;
            else
                e.cls = 2 * a > 2 - ep ? PlaceClass::Good : PlaceClass::Close;
        } else {
            e.kappa = constants_table().at("kappa_other");
            e.ell = LogLinear::log_prime(p, Rat(ep));
            bool large = ep > 0;
            if (!large)
                e.cls = PlaceClass::Bounded;
            else
                e.cls = 2 * a > -ep ? PlaceClass::Good : PlaceClass::Close;
        }
        rep.entries.push_back(e);
    }
    if (!saw_two) {
        HelpfulPlaceEntry e;
        e.place = Place::finite(Int(2));
        e.kappa = constants_table().at("kappa_two");
        e.ell = LogLinear::log_prime(Int(2), Rat(4));
        e.cls = PlaceClass::Bounded;
        rep.entries.push_back(e);
    }

    rep.h_L_value = h_L(c1, c2, L).lower;
    LogLinear sum_close;
    for (auto& e : rep.entries) {
        if (e.cls == PlaceClass::Good) rep.sum_good = rep.sum_good + e.ell;
        if (e.cls == PlaceClass::Close) sum_close = sum_close + e.ell;
    }
    rep.sum_not_close = rep.h_L_value - sum_close;

    LogLinear third_hl = rep.h_L_value.scale(ratq(1, 3));
    LogLinear log6 = LogLinear::log_positive_rational(Rat(6));
    LogLinear rhs1 = third_hl - log6.scale(ratq(2, 3));
    // log(16 * 6^{2/3} * L) = 4 log 2 + (2/3)(log 2 + log 3) + log L
    LogLinear rhs2 = third_hl - (LogLinear::log_prime(2, Rat(4)) + log6.scale(ratq(2, 3)) +
                                 LogLinear::log_positive_rational(L));
    rep.lemma_not_close = LogLinear::compare(rep.sum_not_close, rhs1) >= 0;
    rep.lemma_good = LogLinear::compare(rep.sum_good, rhs2) >= 0;
    rep.margin_not_close = (rep.sum_not_close - rhs1).eval();
    rep.margin_good = (rep.sum_good - rhs2).eval();
    if (!rep.lemma_not_close || !rep.lemma_good)
        throw std::logic_error("helpful_places_report: lemma inequality failed");
    return rep;
}

double equidist_upper(const Rat& c1, const Rat& c2, long N, double eps) {
    if (N < 2) throw std::domain_error("equidist_upper: N must be >= 2");
    if (!(eps > 0 && eps < 1)) throw std::domain_error("equidist_upper: need 0 < eps < 1");
    double h = weil_height2(c1, c2).eval().mid_d();
    double c_eps = 40.0 * std::log(25.0 / eps);
    return (eps + c_eps / (double)(N - 1)) * (h + 1.0);
}

double prop_upper_with_L(const Rat& c1, const Rat& c2, long N, double delta, const Rat& L) {
    if (N < 2) throw std::domain_error("prop_upper_with_L: N must be >= 2");
    if (!(delta > 0 && delta < 0.25)) throw std::domain_error("prop_upper_with_L: need 0 < delta < 1/4");
    if (L < 27) throw std::domain_error("prop_upper_with_L: need L >= 27");
    double hl = h_L(c1, c2, L).lower.eval().mid_d();
    return 4.0 * (delta + 1.5 * std::log(1.0 / delta) / (double)(N - 1)) * hl;
}

}  // namespace quaddyn
