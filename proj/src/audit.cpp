#include "quaddyn/audit.hpp"

namespace quaddyn {

namespace {

Rat pow10_rat(int e) {
    Int n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, (unsigned long)std::abs(e));
    return e >= 0 ? Rat(n) : ratq(1, n);
}

}  // namespace

const std::map<std::string, Rat>& constants_table() {
    static const std::map<std::string, Rat> table = {
        {"alpha1", ratq(1, 192)},
        {"C1", ratq(3, 17)},
        {"alpha2", ratq(1, 2)},
        {"C2", ratq(5, 2)},
        {"L_arch", Rat(1000)},
        {"L_equidist", Rat(27)},
        {"C_eps_factor", Rat(40)},
        {"C_eps_inner", Rat(25)},
        {"weak_lower_scale", ratq(1, 16)},
        {"weak_lower_log_arg", Rat(2000)},
        {"kappa_arch", Rat(3)},
        {"kappa_two", Rat(2)},
        {"kappa_other", Rat(1)},
        {"delta", pow10_rat(-75)},
        {"B", pow10_rat(82)},
        {"N_large_height", Rat(281857)},
        {"h_threshold", Rat(139)},
    };
    return table;
}

Certificate delta_certificate(mpfr_prec_t prec) {
    Certificate cert;
    cert.name = "delta";
    cert.verified = true;
    auto step = [&](const std::string& what, const Interval& v, bool ok) {
        cert.trace.emplace_back(what, v);
        cert.verified = cert.verified && ok;
    };
    const Rat delta = constants_table().at("delta");

    // Branch 1: |c1-c2|_v <= 1/H at >= 99/100 of the archimedean places
    // forces h(c1-c2) >= (99/100) log H = log 2001, and the weak pairing
    // lower bound leaves log(2001/2000)/16.
    Interval t1 = Interval::log_of_rational(ratq(2001, 2000), prec).mul_rational(ratq(1, 16));
    step("log(2001/2000)/16", t1, t1.certainly_gt(ratq(312, 10000000)));
    step("branch1 exceeds delta", t1, t1.certainly_gt(delta));

    // Branch 2: H = 2001^{100/99}, M = 9 H^2; places with |c1-c2|_v > 1/H.
    Interval H = Interval::log_of_rational(Rat(2001), prec).mul_rational(ratq(100, 99)).exp();
    step("H = 2001^(100/99)", H, true);
    Interval M = H * H;
    M = M.mul_rational(Rat(9));
    step("M = 9H^2", M, M.certainly_ge(Rat(1000)));
    Interval t2 = M.log().mul_rational(ratq(1, 64));
    step("(1/64) log M", t2, t2.certainly_gt(ratq(14, 100)));

    // s^2 = 117 * 2^6 * 9^3 * H^8 / 100 plugged into the close-parameter
    // bound leaves 100^2 / (2^18 9^6 117^2 H^18) at each such place.
    Interval H18 = H.pow_rational(Rat(18));
    Int denom_c = (Int(1) << 18) * Int(531441) * Int(13689);  // 2^18 * 9^6 * 117^2
    Interval tiny = Interval::from_rational(Rat(10000), prec) / H18.mul_rational(Rat(denom_c));
    step("100^2/(2^18 9^6 117^2 H^18)", tiny, tiny.certainly_gt(Rat(0)));

    Interval branch2 = Interval::min(t2, tiny).mul_rational(ratq(1, 100));
    step("(1/100) min{0.14, tiny}", branch2, branch2.certainly_gt(delta));

    cert.claimed = Interval::min(t1, branch2);
    cert.trace.emplace_back("certified lower bound for the pairing", cert.claimed);
    cert.verified = cert.verified && cert.claimed.certainly_gt(delta);
    return cert;
}

Certificate b_certificate(mpfr_prec_t prec) {
    Certificate cert;
    cert.name = "B";
    cert.verified = true;
    auto step = [&](const std::string& what, const Interval& v, bool ok) {
        cert.trace.emplace_back(what, v);
        cert.verified = cert.verified && ok;
    };

    const Rat alpha1 = constants_table().at("alpha1");
    const Rat C1 = constants_table().at("C1");
    const Rat delta = constants_table().at("delta");

    // Large-height branch.  Threshold re-derived: h+1 > 4(C1+alpha1)/alpha1.
    Rat threshold = 4 * (C1 + alpha1) / alpha1;
    step("4(C1+alpha1)/alpha1", Interval::from_rational(threshold, prec),
         threshold <= Rat(140));  // so h > 139 suffices

    // C(alpha1/2) = 40 log(50/alpha1) = 40 log 9600 < 367.
    Interval c_eps = Interval::log_of_rational(Rat(50) / alpha1, prec).mul_rational(Rat(40));
    step("C(alpha1/2) = 40 log 9600", c_eps, c_eps.certainly_lt(Rat(367)));

    Interval n_large = c_eps.mul_rational(Rat(4) / alpha1);
    step("N-1 < 4 C(alpha1/2)/alpha1", n_large, n_large.certainly_lt(Rat(281856)));
    step("281857 < 10^6", Interval::from_rational(Rat(281857), prec),
         Rat(281857) < pow10_rat(6));

    // Small-height branch with eps = alpha1 delta / (8 (C1+alpha1)).
    Rat ratio = (C1 + alpha1) / alpha1;  // = 593/17
    step("(C1+alpha1)/alpha1 <= 35", Interval::from_rational(ratio, prec), ratio <= 35);
    Rat lead = 320 * ratio / delta;
    Rat log_arg = 200 * ratio / delta;
    Interval n_small = Interval::log_of_rational(log_arg, prec).mul_rational(lead);
    step("N-1 <= 320(C1+a1)/(a1 d) log(200(C1+a1)/(a1 d))", n_small, true);

    // Displayed majorization: <= 75 * 320 * 35 * 10^75 * log(200*35*10).
    Interval display = Interval::log_of_rational(Rat(70000), prec)
                           .mul_rational(Rat(75) * 320 * 35 * pow10_rat(75));
    step("75*320*35*10^75 log(70000)", display, n_small.certainly_le(display));
    step("final bound < 10^82", display, display.certainly_lt(pow10_rat(82)));

    cert.claimed = n_small.add_rational(Rat(1));
    cert.trace.emplace_back("certified bound on N", cert.claimed);
    cert.verified = cert.verified && cert.claimed.certainly_lt(pow10_rat(82));
    return cert;
}

}  // namespace quaddyn
