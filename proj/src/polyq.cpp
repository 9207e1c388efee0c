#include "quaddyn/polyq.hpp"

#include <algorithm>
#include <stdexcept>

namespace quaddyn {

void PolyQ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyQ PolyQ::constant(const Rat& c) { return PolyQ({c}); }

PolyQ PolyQ::identity() { return PolyQ({Rat(0), Rat(1)}); }

const Rat& PolyQ::coeff(size_t i) const {
    static const Rat kZero(0);
    return i < c_.size() ? c_[i] : kZero;
}

const Rat& PolyQ::lead() const {
    if (is_zero()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
}

Rat PolyQ::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); i++) d[i - 1] = c_[i] * Rat((long)i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return scale(Rat(1) / lead());
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); i++) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) r[i] += o.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); i++) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) r[i] -= o.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); j++) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return PolyQ(std::move(r));
}

PolyQ PolyQ::scale(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); i++) r[i] = c_[i] * s;
    return PolyQ(std::move(r));
}

std::pair<PolyQ, PolyQ> PolyQ::divrem(const PolyQ& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {PolyQ(), *this};
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(degree() - d.degree() + 1, Rat(0));
    Rat inv_lead = Rat(1) / d.lead();
    for (int k = degree() - d.degree(); k >= 0; k--) {
        Rat q = rem[k + d.degree()] * inv_lead;
        quo[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= d.degree(); j++) rem[k + j] -= q * d.c_[j];
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::divide_exact(const PolyQ& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    return q;
}

bool PolyQ::divides(const PolyQ& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divrem(*this).second.is_zero();
}

std::vector<std::string> PolyQ::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (auto& c : c_) out.push_back(rat_str(c));
    return out;
}

PolyQ PolyQ::from_coeff_strings(const std::vector<std::string>& s) {
    std::vector<Rat> c;
    c.reserve(s.size());
    for (auto& t : s) c.push_back(parse_rat(t));
    return PolyQ(std::move(c));
}

PolyQ iterate_poly(const Rat& c, int n) {
    if (n < 0) throw std::domain_error("iterate_poly: n < 0");
    PolyQ f = PolyQ::identity();
    for (int k = 0; k < n; k++) f = f * f + PolyQ::constant(c);
    return f;
}

PolyQ preper_poly(const Rat& c, int m, int n) {
    if (n < 1) throw std::domain_error("preper_poly: n must be >= 1");
    if (m < 0) throw std::domain_error("preper_poly: m must be >= 0");
    // f^{m+n} = f^n o f^m; build both from the cheaper iterate chain.
    PolyQ fm = iterate_poly(c, m);
    PolyQ fmn = fm;
    for (int k = 0; k < n; k++) fmn = fmn * fmn + PolyQ::constant(c);
    return fmn - fm;
}

// ---------------------------------------------------------------------------
// Modular machinery for gcd and rational roots.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod_u64(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod_u64(a, p - 2, p); }

// Deterministic supply of 62-bit primes.
const std::vector<Int>& prime_pool() {
    static std::vector<Int> pool = [] {
        std::vector<Int> v;
        Int p = Int(1) << 62;
        for (int i = 0; i < 64; i++) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            v.push_back(p);
        }
        return v;
    }();
    return pool;
}

struct PolyZp {
    std::vector<u64> c;  // lowest degree first, normalized
    u64 p;

    int degree() const { return (int)c.size() - 1; }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

void make_monic(PolyZp& a) {
    if (a.c.empty()) return;
    u64 inv = invmod(a.c.back(), a.p);
    for (auto& x : a.c) x = mulmod(x, inv, a.p);
}

PolyZp rem_zp(PolyZp a, const PolyZp& b) {
    u64 p = a.p;
    u64 inv_lead = invmod(b.c.back(), p);
    while ((int)a.c.size() >= (int)b.c.size() && !a.c.empty()) {
        u64 q = mulmod(a.c.back(), inv_lead, p);
        size_t shift = a.c.size() - b.c.size();
        for (size_t j = 0; j < b.c.size(); j++) {
            u64 t = mulmod(q, b.c[j], p);
            u64& x = a.c[shift + j];
            x = x >= t ? x - t : x + p - t;
        }
        a.normalize();
    }
    return a;
}

PolyZp gcd_zp(PolyZp a, PolyZp b) {
    a.normalize();
    b.normalize();
    while (!b.c.empty()) {
        PolyZp r = rem_zp(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

// Quotient g / d for monic-ish d over F_p; remainder discarded.
PolyZp quot_zp(PolyZp g, const PolyZp& d) {
    PolyZp quot;
    quot.p = g.p;
    if ((int)g.c.size() < (int)d.c.size()) return quot;
    quot.c.assign(g.c.size() - d.c.size() + 1, 0);
    u64 inv_lead = invmod(d.c.back(), g.p);
    while ((int)g.c.size() >= (int)d.c.size() && !g.c.empty()) {
        u64 q = mulmod(g.c.back(), inv_lead, g.p);
        size_t sh = g.c.size() - d.c.size();
        quot.c[sh] = q;
        for (size_t j = 0; j < d.c.size(); j++) {
            u64 t = mulmod(q, d.c[j], g.p);
            u64& xx = g.c[sh + j];
            xx = xx >= t ? xx - t : xx + g.p - t;
        }
        g.normalize();
    }
    quot.normalize();
    return quot;
}

PolyZp mulmod_poly(const PolyZp& a, const PolyZp& b, const PolyZp& mod) {
    PolyZp r;
    r.p = a.p;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++) {
            u64 t = mulmod(a.c[i], b.c[j], a.p);
            u64& x = r.c[i + j];
            x = (x + t) % a.p;
        }
    }
    r.normalize();
    return rem_zp(std::move(r), mod);
}

PolyZp powmod_poly(PolyZp base, const Int& e, const PolyZp& mod) {
    PolyZp r;
    r.p = base.p;
    r.c = {1};
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mulmod_poly(r, r, mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod_poly(r, base, mod);
    }
    return r;
}

// Denominator-cleared primitive integer polynomial, lead > 0.
std::vector<Int> to_primitive_int(const PolyQ& a) {
    Int den_lcm = 1;
    for (auto& c : a.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> z(a.coeffs().size());
    Int content = 0;
    for (size_t i = 0; i < z.size(); i++) {
        Rat t = a.coeffs()[i] * den_lcm;
        z[i] = t.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& x : z) x /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& x : z) x = -x;
    return z;
}

u64 int_mod(const Int& n, u64 p) { return mpz_fdiv_ui(n.get_mpz_t(), p); }

PolyZp int_poly_mod(const std::vector<Int>& a, u64 p) {
    PolyZp r;
    r.p = p;
    r.c.resize(a.size());
    for (size_t i = 0; i < a.size(); i++) r.c[i] = int_mod(a[i], p);
    r.normalize();
    return r;
}

PolyQ int_to_polyq(const std::vector<Int>& a) {
    std::vector<Rat> c(a.size());
    for (size_t i = 0; i < a.size(); i++) c[i] = Rat(a[i]);
    return PolyQ(std::move(c));
}

}  // namespace

PolyQ gcd_poly(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    std::vector<Int> A = to_primitive_int(a);
    std::vector<Int> B = to_primitive_int(b);
    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

    int best_d = -1;
    std::vector<Int> residues;
    Int modulus = 1;
    std::vector<Int> prev_candidate;

    for (auto& P : prime_pool()) {
        u64 p = P.get_ui();
        if (int_mod(A.back(), p) == 0 || int_mod(B.back(), p) == 0) continue;
        PolyZp g = gcd_zp(int_poly_mod(A, p), int_poly_mod(B, p));
        int d = g.degree();
        if (d == 0) return PolyQ::constant(Rat(1));
        if (best_d == -1 || d < best_d) {
            best_d = d;
            residues.assign(d + 1, 0);
            modulus = 1;
            prev_candidate.clear();
        } else if (d > best_d) {
            continue;  // unlucky prime
        }
        // Normalize the image to leading coefficient gamma and fold into CRT.
        u64 scale = int_mod(gamma, p);
        Int newmod = modulus * Int((unsigned long)p);
        u64 minv = invmod(int_mod(modulus, p), p);
        for (int i = 0; i <= d; i++) {
            u64 gi = mulmod(g.c[i], scale, p);
            u64 ri = int_mod(residues[i], p);
            u64 delta = mulmod((gi + p - ri) % p, minv, p);
            residues[i] += modulus * Int((unsigned long)delta);
        }
        modulus = newmod;
        // Symmetric lift and stabilization check.
        std::vector<Int> cand(d + 1);
        for (int i = 0; i <= d; i++) {
            cand[i] = residues[i];
            if (cand[i] * 2 > modulus) cand[i] -= modulus;
        }
        if (cand == prev_candidate) {
            Int content = 0;
            for (auto& x : cand) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
            std::vector<Int> pp = cand;
            if (content > 1)
                for (auto& x : pp) x /= content;
            PolyQ g_q = int_to_polyq(pp);
            if (g_q.divides(a) && g_q.divides(b)) return g_q.monic();
        }
        prev_candidate = std::move(cand);
    }
    throw std::runtime_error("gcd_poly: modular reconstruction failed");
}

PolyQ lcm_poly(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm with zero polynomial");
    PolyQ g = gcd_poly(a, b);
    return (a * b.divide_exact(g)).monic();
}

PolyQ squarefree_part(const PolyQ& a) {
    if (a.is_zero()) throw std::domain_error("squarefree_part of zero");
    if (a.degree() == 0) return PolyQ::constant(Rat(1));
    PolyQ g = gcd_poly(a, a.derivative());
    return a.divide_exact(g).monic();
}

std::vector<Rat> rational_roots(const PolyQ& a) {
    if (a.is_zero()) throw std::domain_error("rational_roots of zero");
    std::vector<Rat> roots;
    // Split off the power of z.
    size_t k = 0;
    while (k < a.coeffs().size() && a.coeffs()[k] == 0) k++;
    if (k > 0) roots.push_back(Rat(0));
    PolyQ rest{std::vector<Rat>(a.coeffs().begin() + k, a.coeffs().end())};
    if (rest.degree() >= 1) {
        PolyQ F = squarefree_part(rest);
        if (F.degree() >= 1) {
            std::vector<Int> FZ = to_primitive_int(F);
            std::vector<Int> FZd;  // derivative
            for (size_t i = 1; i < FZ.size(); i++) FZd.push_back(FZ[i] * Int((long)i));

            // Prime with good reduction of the squarefree model.
            u64 p = 0;
            for (auto& P : prime_pool()) {
                u64 q = P.get_ui();
                if (int_mod(FZ.back(), q) == 0) continue;
                PolyZp fm = int_poly_mod(FZ, q);
                PolyZp fd = int_poly_mod(FZd, q);
                if (gcd_zp(fm, fd).degree() == 0) {
                    p = q;
                    break;
                }
            }
            if (p == 0) throw std::runtime_error("rational_roots: no good prime found");

            PolyZp fm = int_poly_mod(FZ, p);
            // x^p mod F, then the product of linear factors.
            PolyZp x;
            x.p = p;
            x.c = {0, 1};
            PolyZp xp = powmod_poly(x, Int((unsigned long)p), fm);
            // xp - x
            PolyZp diff = xp;
            if (diff.c.size() < 2) diff.c.resize(2, 0);
            diff.c[1] = (diff.c[1] + p - 1) % p;
            diff.normalize();
            PolyZp lin = gcd_zp(diff, fm);

            // Equal-degree splitting into roots.
            std::vector<u64> mod_roots;
            std::vector<PolyZp> stack;
            if (lin.degree() >= 1) stack.push_back(lin);
            u64 shift_seed = 1;
            while (!stack.empty()) {
                PolyZp g = stack.back();
                stack.pop_back();
                if (g.degree() == 1) {
                    // monic z + c0 -> root = -c0
                    mod_roots.push_back((p - g.c[0]) % p);
                    continue;
                }
                for (;;) {
                    u64 aa = shift_seed++;
                    PolyZp base;
                    base.p = p;
                    base.c = {aa % p, 1};
                    PolyZp w = powmod_poly(base, Int((unsigned long)((p - 1) / 2)), g);
                    if (w.c.empty()) w.c = {0};
                    w.c[0] = (w.c[0] + p - 1) % p;
                    w.normalize();
                    PolyZp d = gcd_zp(std::move(w), g);
                    if (d.degree() >= 1 && d.degree() < g.degree()) {
                        stack.push_back(quot_zp(g, d));
                        stack.push_back(std::move(d));
                        break;
                    }
                }
            }

            // Hensel lift each simple root and reconstruct the rational.
            // Any rational root u/v (lowest terms) has u | FZ[0], v | lead.
            Int bound = std::max(Int(abs(FZ.front())), Int(abs(FZ.back())));
            Int target = 2 * bound * bound + 1;
            for (u64 r0 : mod_roots) {
                Int m((unsigned long)p);
                Int r((unsigned long)r0);
                while (m < target) {
                    Int m2 = m * m;
                    // Newton step: r -= F(r) / F'(r)  (mod m2)
                    Int fr = 0, fdr = 0;
                    for (size_t i = FZ.size(); i-- > 0;) fr = (fr * r + FZ[i]) % m2;
                    for (size_t i = FZd.size(); i-- > 0;) fdr = (fdr * r + FZd[i]) % m2;
                    Int inv;
                    if (mpz_invert(inv.get_mpz_t(), fdr.get_mpz_t(), m2.get_mpz_t()) == 0) break;
                    r = (r - fr * inv) % m2;
                    if (r < 0) r += m2;
                    m = m2;
                }
                if (m < target) continue;
                // Rational reconstruction: u/v = r mod m with |u|,|v| <= sqrt(m/2).
                Int s0 = m, s1 = r, t0 = 0, t1 = 1;
                Int lim;
                mpz_sqrt(lim.get_mpz_t(), Int(m / 2).get_mpz_t());
                while (s1 > lim) {
                    Int q = s0 / s1;
                    Int s2 = s0 - q * s1;
                    Int t2 = t0 - q * t1;
                    s0 = s1;
                    s1 = s2;
                    t0 = t1;
                    t1 = t2;
                }
                if (t1 == 0 || abs(t1) > lim) continue;
                Rat cand(s1, t1);
                cand.canonicalize();
                if (F.eval(cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace quaddyn
