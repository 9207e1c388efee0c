#include "quaddyn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace quaddyn {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') i++;
    size_t num_start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
    if (i == num_start) throw std::invalid_argument("bad rational literal: " + s);
    std::string num = s[0] == '+' ? s.substr(1, i - 1) : s.substr(0, i);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') throw std::invalid_argument("bad rational literal: " + s);
        i++;
        size_t den_start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
        if (i == den_start || i != s.size())
            throw std::invalid_argument("bad rational literal: " + s);
        den = s.substr(den_start);
    }
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Int powmod(Int base, Int e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool miller_rabin(const Int& n, const Int& a) {
    if (n % a == 0) return n == a;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; i++) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    static const Int limit("3317044064679887385961981");  // MR basis cert bound
    if (n < limit) {
        for (long p : small)
            if (!miller_rabin(n, Int(p))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_brent(const Int& n, std::uint64_t& rng) {
    // Brent's cycle variant of Pollard rho; n must be odd composite.
    while (true) {
        Int y = Int(splitmix64(rng) % 1000003) % n;
        Int c = Int(splitmix64(rng) % 1000003 + 1) % n;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; i++) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; i++) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    if (d < 0) d = -d;
                    q = (q * d) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                if (d < 0) d = -d;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(Int n, std::map<Int, int>& out, std::uint64_t& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_brent(n, rng);
    factor_rec(d, out, rng);
    factor_rec(n / d, out, rng);
}

}  // namespace

std::map<Int, int> factor(const Int& n_in) {
    if (n_in == 0) throw std::domain_error("factor(0)");
    Int n = abs(n_in);
    std::map<Int, int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        while (n % p == 0) {
            out[Int(p)]++;
            n /= p;
        }
    }
    long d = 53;
    while (n > 1 && d < 100000 && Int(d) * d <= n) {
        while (n % d == 0) {
            out[Int(d)]++;
            n /= d;
        }
        d += 2;
    }
    if (n > 1) {
        if (Int(d) * d > n) {
            out[n]++;
        } else {
            std::uint64_t rng = 0x9e3779b97f4a7c15ull;
            factor_rec(n, out, rng);
        }
    }
    return out;
}

std::optional<long> padic_valuation(const Rat& q, const Int& p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("padic_valuation: p not prime");
    if (q == 0) return std::nullopt;
    Int num = q.get_num(), den = q.get_den();
    Int tmp;
    if (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        unsigned long v = mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        return (long)v;
    }
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        unsigned long v = mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        return -(long)v;
    }
    return 0;
}

Rat abs_value_finite(const Rat& q, const Int& p) {
    auto v = padic_valuation(q, p);
    if (!v) throw std::domain_error("abs_value_finite: |0|_p undefined for log use");
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), (unsigned long)std::abs(*v));
    return *v >= 0 ? ratq(1, pw) : ratq(pw, 1);
}

Place Place::finite(const Int& prime) {
    if (!is_prime(prime)) throw std::domain_error("Place::finite: not a prime");
    return Place{prime};
}

std::vector<Int> denominator_primes(const Rat& c1, const Rat& c2) {
    Int d = c1.get_den() * c2.get_den();
    std::vector<Int> out;
    if (d == 1) return out;
    for (auto& [p, e] : factor(d)) out.push_back(p);
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (salt + 1));
    return splitmix64(s);
}

}  // namespace quaddyn
