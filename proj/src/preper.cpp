#include "quaddyn/preper.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

namespace quaddyn {

bool is_preperiodic(const Rat& c, const Rat& x) {
    Int mc = std::max(Int(abs(c.get_num())), c.get_den());
    Int limit = 21 * mc;  // h(y) > h(c) + log 21 certifies escape
    std::set<Rat> seen;
    Rat y = x;
    for (int k = 0; k < 10000; k++) {
        if (std::max(Int(abs(y.get_num())), y.get_den()) > limit) return false;
        if (!seen.insert(y).second) return true;
        y = y * y + c;
    }
    throw std::runtime_error("is_preperiodic: orbit did not resolve");
}

PreperReport common_preper(const Rat& c1, const Rat& c2, int bound) {
    if (c1 == c2) throw std::domain_error("common_preper: intersection is the full preperiodic set");
    if (bound < 1 || bound > 10) throw std::domain_error("common_preper: bound must be in [1, 10]");

    auto make_polys = [&](const Rat& c) {
        std::vector<PolyQ> iter(bound + 1);
        iter[0] = PolyQ::identity();
        for (int k = 1; k <= bound; k++) iter[k] = iter[k - 1] * iter[k - 1] + PolyQ::constant(c);
        std::vector<PolyQ> polys;
        for (int m = 0; m + 1 <= bound; m++)
            for (int n = 1; m + n <= bound; n++) polys.push_back(iter[m + n] - iter[m]);
        return polys;
    };
    std::vector<PolyQ> p1 = make_polys(c1);
    std::vector<PolyQ> p2 = make_polys(c2);

    PolyQ acc = PolyQ::constant(Rat(1));
    for (auto& a : p1)
        for (auto& b : p2) {
            PolyQ g = gcd_poly(a, b);
            if (g.degree() >= 1) acc = lcm_poly(acc, g);
        }

    PreperReport rep;
    rep.bound = bound;
    rep.accumulator = acc;
    rep.distinct_common_count = acc.degree() >= 1 ? squarefree_part(acc).degree() : 0;
    rep.rational_points = acc.degree() >= 1 ? rational_roots(acc) : std::vector<Rat>{};
    rep.include_infinity_total = rep.distinct_common_count + 1;
    return rep;
}

namespace {

using Cd = std::complex<double>;

// Aberth-Ehrlich on a monic squarefree polynomial (double coefficients).
std::vector<Cd> aberth_roots(const PolyQ& poly) {
    PolyQ f = poly.monic();
    int d = f.degree();
    std::vector<Cd> a(d + 1);
    for (int i = 0; i <= d; i++) a[i] = Cd(f.coeff(i).get_d(), 0.0);
    double radius = 1.0;
    for (int i = 0; i < d; i++) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;
    std::vector<Cd> z(d);
    for (int i = 0; i < d; i++) {
        double th = 2.0 * M_PI * i / d + 0.4;
        z[i] = radius * Cd(std::cos(th), std::sin(th));
    }
    auto eval = [&](Cd x, Cd& p, Cd& dp) {
        p = a[d];
        dp = Cd(0, 0);
        for (int i = d - 1; i >= 0; i--) {
            dp = dp * x + p;
            p = p * x + a[i];
        }
    };
    for (int it = 0; it < 500; it++) {
        double worst = 0;
        for (int i = 0; i < d; i++) {
            Cd p, dp;
            eval(z[i], p, dp);
            Cd ratio = dp == Cd(0, 0) ? Cd(0, 0) : p / dp;
            Cd s(0, 0);
            for (int j = 0; j < d; j++)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            Cd corr = ratio / (1.0 - ratio * s);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-13 * radius) break;
    }
    return z;
}

std::vector<Cd> dedup(std::vector<Cd> pts, double tol) {
    std::vector<Cd> out;
    for (auto& p : pts) {
        bool found = false;
        for (auto& q : out)
            if (std::abs(p - q) < tol) {
                found = true;
                break;
            }
        if (!found) out.push_back(p);
    }
    return out;
}

}  // namespace

long common_preper_oracle(const Rat& c1, const Rat& c2, int bound) {
    if (bound < 1 || bound > 4) throw std::domain_error("common_preper_oracle: bound must be in [1, 4]");
    auto all_roots = [&](const Rat& c) {
        std::vector<Cd> roots;
        for (int m = 0; m + 1 <= bound; m++)
            for (int n = 1; m + n <= bound; n++) {
                PolyQ sf = squarefree_part(preper_poly(c, m, n));
                auto r = aberth_roots(sf);
                roots.insert(roots.end(), r.begin(), r.end());
            }
        return dedup(roots, 1e-8);
    };
    std::vector<Cd> r1 = all_roots(c1);
    std::vector<Cd> r2 = all_roots(c2);
    long count = 0;
    for (auto& z : r1)
        for (auto& w : r2)
            if (std::abs(z - w) < 1e-8) {
                count++;
                break;
            }
    return count;
}

}  // namespace quaddyn
