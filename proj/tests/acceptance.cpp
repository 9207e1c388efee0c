// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failures.  Seeds and tolerances are fixed here.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quaddyn/arch.hpp"
#include "quaddyn/audit.hpp"
#include "quaddyn/heights.hpp"
#include "quaddyn/nonarch.hpp"
#include "quaddyn/pairing.hpp"
#include "quaddyn/preper.hpp"
#include "../tests/sform_oracle.hpp"

using namespace quaddyn;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, bool pass, const std::string& what, double secs) {
    std::printf("%s criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", idx, what.c_str(), secs);
    std::fflush(stdout);
    if (!pass) failures++;
}

std::string run_cli(const std::string& args, int* status) {
    std::string cmd = std::string(QUADDYN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *status = -1;
        return out;
    }
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    *status = WEXITSTATUS(pclose(p));
    return out;
}

Rat random_rat_bits(std::uint64_t& rng, int max_bits) {
    int nb = 1 + (int)(splitmix64(rng) % max_bits);
    int db = 1 + (int)(splitmix64(rng) % max_bits);
    Int num = Int(splitmix64(rng) % ((std::uint64_t)1 << nb));
    Int den = Int(splitmix64(rng) % ((std::uint64_t)1 << db)) + 1;
    if (splitmix64(rng) & 1) num = -num;
    return ratq(num, den);
}

long log_plus_norm(const Rat& q, const Int& p) {
    if (q == 0) return 0;
    return std::max(0L, -*padic_valuation(q, p));
}

// ---------------------------------------------------------------------
// 1. common-preper CLI on (0, -1), bound 8: {0, 1, -1}, total 4, < 60 s.
void criterion1() {
    auto t0 = Clock::now();
    int status = 0;
    std::string out = run_cli("common-preper --c1 0 --c2 -1 --bound 8", &status);
    bool pass = status == 0;
    if (pass) {
        json j = json::parse(out, nullptr, false);
        pass = !j.is_discarded() && j["distinct_common_count"] == 3 &&
               j["include_infinity_total"] == 4 &&
               j["rational_points"] == json::array({"-1", "0", "1"});
    }
    double secs = seconds_since(t0);
    report(1, pass && secs < 60.0, "common preperiodic points of z^2 and z^2-1 within bound 8",
           secs);
}

// 2. Hyde pair: at least 27 common preperiodic points, < 10 min.
void criterion2() {
    auto t0 = Clock::now();
    // Bound 7 is the smallest capturing all 27 points (see README).
    PreperReport rep = common_preper(ratq(-21, 16), ratq(-29, 16), 7);
    double secs = seconds_since(t0);
    bool pass = rep.include_infinity_total >= 27 && secs < 600.0;
    report(2, pass,
           "Hyde pair (-21/16, -29/16) has >= 27 common preperiodic points (found " +
               std::to_string(rep.include_infinity_total) + " incl. infinity at bound 7)",
           secs);
}

// 3. Non-archimedean exactness: sandwich and symmetry for 1000 random pairs.
void criterion3() {
    auto t0 = Clock::now();
    std::uint64_t rng = 303;
    bool pass = true;
    int pairs = 0;
    while (pairs < 1000) {
        Rat c1 = random_rat_bits(rng, 42);
        Rat c2 = random_rat_bits(rng, 42);
        if (c1 == c2) continue;
        pairs++;
        std::vector<Int> ps = denominator_primes(c1, c2);
        ps.push_back(Int(2));
        for (auto& p : ps) {
            EnergyBound a = local_energy_padic(c1, c2, p);
            EnergyBound b = local_energy_padic(c2, c1, p);
            pass = pass && LogLinear::compare(a.lower, b.lower) == 0 &&
                   LogLinear::compare(a.upper, b.upper) == 0 && a.exact == b.exact;
            long lp_diff = log_plus_norm(c1 - c2, p);
            long lp_max = std::max(log_plus_norm(c1, p), log_plus_norm(c2, p));
            Rat low = p == 2 ? ratq(lp_diff, 16) : ratq(lp_diff, 4);
            pass = pass && LogLinear::compare(a.lower, LogLinear::log_prime(p, low)) >= 0 &&
                   LogLinear::compare(a.upper, LogLinear::log_prime(p, ratq(lp_max, 2))) <= 0;
            if (!pass) break;
        }
        if (!pass) break;
    }
    report(3, pass, "local p-adic energies: exact theorem sandwich and symmetry, 1000 pairs",
           seconds_since(t0));
}

// 4. p = 2 t-form dispatch vs the s-form formulas on a grid, zero tolerance.
void criterion4() {
    auto t0 = Clock::now();
    bool pass = true;
    long points = 0;
    for (long m = 5; m <= 24 && pass; m++) {
        for (long a = -(m / 2) - 2; a <= m - 1 && pass; a++) {
            Rat c1(Int(1), Int(1) << m);
            Rat d = a >= 0 ? ratq(Int(1), Int(1) << a) : ratq(Int(1) << (-a), Int(1));
            Rat c2 = c1 + d;
            EnergyBound eb = local_energy_padic(c1, c2, Int(2));
            auto expect = quaddyn_test::sform_energy_p2(m, a);
            auto coeff = [](const LogLinear& v) {
                auto it = v.terms().find(Int(2));
                return it == v.terms().end() ? Rat(0) : it->second;
            };
            pass = pass && coeff(eb.lower) == expect.lower && coeff(eb.upper) == expect.upper &&
                   eb.exact == expect.exact;
            points++;
        }
    }
    report(4, pass && points >= 200,
           "p=2 dispatch matches the s-form case formulas on " + std::to_string(points) +
               " grid points",
           seconds_since(t0));
}

// 5 & 6. Pairing sandwich with explicit constants and the weak lower bound,
// 100 random pairs with h <= 20 at 1e5 MC samples.
void criteria5and6() {
    auto t0 = Clock::now();
    std::uint64_t rng = 505;
    bool pass5 = true, pass6 = true;
    int done = 0;
    while (done < 100) {
        Rat c1 = random_rat_bits(rng, 26);
        Rat c2 = random_rat_bits(rng, 26);
        if (c1 == c2) continue;
        auto r = adelic_pairing(c1, c2, 100000, 9000 + done, 4);
        double lo_est = r.finite_lower.eval().lo_d() + r.arch.mean;
        double hi_est = r.finite_upper.eval().hi_d() + r.arch.mean;
        double slack = 3.0 * r.arch.std_err + 1e-6;
        if (!(hi_est >= r.lower_thm - slack && lo_est <= r.upper_thm + slack)) pass5 = false;
        if (!(hi_est >= r.weak_lower - slack)) pass6 = false;
        done++;
    }
    double secs = seconds_since(t0);
    report(5, pass5 && secs < 600.0,
           "pairing sandwich (1/192) h - 3/17 <= <f,g> <= (1/2) h + 5/2 on 100 pairs", secs);
    report(6, pass6, "weak lower bound (1/16) h(c1-c2) - (1/16) log 2000 on the same corpus",
           secs);
}

// 7. MC vs circle oracle for c in {-2, -1, 2, 5} at 1e5 samples.
void criterion7() {
    auto t0 = Clock::now();
    bool pass = true;
    for (double c : {-2.0, -1.0, 2.0, 5.0}) {
        Interval oracle = energy_circle_oracle(Cx(c, 0), 8192);
        MCEstimate mc = arch_energy_mc(Cx(0, 0), Cx(c, 0), 100000, 777, 4);
        double mid = 0.5 * (oracle.lo_d() + oracle.hi_d());
        double tol = 3.0 * mc.std_err + 0.5 * oracle.width_d() + 1e-6;
        if (std::abs(mc.mean - mid) > tol) pass = false;
    }
    report(7, pass, "arch_energy_mc(0, c) matches the circle-measure oracle within 3 stderr",
           seconds_since(t0));
}

// 8. Canonical heights: exact zero, log 2, functional equation at 2e-6.
void criterion8() {
    auto t0 = Clock::now();
    auto zero = canonical_height(Rat(-1), Rat(0), 1e-9);
    bool pass = zero.preperiodic && zero.value.is_exact_zero();

    auto l2 = canonical_height(Rat(0), Rat(2), 1e-9);
    pass = pass && l2.value.lo_d() <= std::log(2.0) && l2.value.hi_d() >= std::log(2.0) &&
           l2.value.width_d() <= 1e-9;

    std::uint64_t rng = 808;
    int done = 0;
    while (done < 100 && pass) {
        Rat c = random_rat_bits(rng, 14);
        Rat x = random_rat_bits(rng, 14);
        auto hx = canonical_height(c, x, 1e-6);
        auto hfx = canonical_height(c, x * x + c, 1e-6);
        if (hx.preperiodic) {
            pass = hfx.preperiodic;
        } else {
            pass = std::abs(hfx.value.mid_d() - 2.0 * hx.value.mid_d()) <= 2e-6;
        }
        done++;
    }
    report(8, pass, "canonical heights: hhat_{-1}(0) = 0, hhat_0(2) = log 2, functional equation",
           seconds_since(t0));
}

// 9. Distortion battery at c = 26 with 1e4 samples.
void criterion9() {
    auto t0 = Clock::now();
    BatteryReport rep = distortion_battery(Cx(26, 0), 10000, 2626);
    bool pass = rep.all_pass;
    report(9, pass, "distortion battery at c = 26: disk measures and escape bounds",
           seconds_since(t0));
}

// 10. Audit certificates at 256 bits, < 1 s each.
void criterion10() {
    auto t0 = Clock::now();
    Certificate d = delta_certificate(256);
    double td = seconds_since(t0);
    auto t1 = Clock::now();
    Certificate b = b_certificate(256);
    double tb = seconds_since(t1);
    bool pass = d.verified && b.verified && td < 1.0 && tb < 1.0;
    report(10, pass, "delta = 10^-75 and B < 10^82 certificate chains verify", td + tb);
}

// 11. Equidistribution upper bound for the Hyde pair.
void criterion11() {
    auto t0 = Clock::now();
    Rat c1(-21, 16), c2(-29, 16);
    long n = common_preper(c1, c2, 7).include_infinity_total;
    auto r = adelic_pairing(c1, c2, 100000, 1111, 4);
    double est_hi = r.finite_upper.eval().hi_d() + r.arch.mean;
    bool pass = n >= 2;
    for (double eps : {0.1, 0.25, 0.5}) {
        double bound = equidist_upper(c1, c2, n, eps);
        if (!(est_hi <= bound + 3.0 * r.arch.std_err)) pass = false;
    }
    report(11, pass, "Hyde pair pairing below the equidistribution bound for eps in {.1,.25,.5}",
           seconds_since(t0));
}

// 12. Positivity floor on 20 close pairs c2 = c1 + 10^-6.
void criterion12() {
    auto t0 = Clock::now();
    std::uint64_t rng = 1212;
    bool pass = true;
    const Rat step(1, 1000000);
    const double delta = 1e-75;
    for (int i = 0; i < 20; i++) {
        Rat c1 = random_rat_bits(rng, 10);
        Rat c2 = c1 + step;
        auto r = adelic_pairing(c1, c2, 20000, 4000 + i, 4);
        double hi_est = r.finite_upper.eval().hi_d() + r.arch.mean;
        if (!(hi_est >= delta - 3.0 * r.arch.std_err)) pass = false;
    }
    report(12, pass,
           "pairing >= 10^-75 - 3 stderr on 20 close pairs (headline bound spot checks)",
           seconds_since(t0));
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criteria5and6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("acceptance total: %.1fs, %d failure(s)\n", seconds_since(t0), failures);
    return failures;
}
