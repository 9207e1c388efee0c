#pragma once

// Exact rationals (GMP), places of Q, p-adic valuations and integer
// factorization helpers.  mpq_class is canonical by construction: lowest
// terms, positive denominator, zero stored as 0/1.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quaddyn {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class's two-argument constructor does not reduce to lowest terms;
// every fraction built from parts goes through here.
inline Rat ratq(const Int& n, const Int& d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}
inline Rat ratq(long n, long d) { return ratq(Int(n), Int(d)); }

// Text format: optional sign, digits, optional "/" and digits.  No
// decimals, no whitespace.  Throws std::invalid_argument on bad input.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& q);

// Deterministic Miller-Rabin below 3.3e24, BPSW beyond.
bool is_prime(const Int& n);

// Full factorization (trial division + Pollard-Brent).  Keys are primes,
// values exponents.  n must be nonzero; the sign is dropped.
std::map<Int, int> factor(const Int& n);

// v with q = p^v * u/w, p coprime to u*w.  nullopt encodes the infinite
// valuation of q = 0.
std::optional<long> padic_valuation(const Rat& q, const Int& p);

// |q|_p as an exact rational p^{-v}.  q must be nonzero.
Rat abs_value_finite(const Rat& q, const Int& p);

struct Place {
    Int p;  // 0 encodes the archimedean place

    // K = Q throughout, so every place has weight r_v = [K_v:Q_v]/[K:Q] = 1.
    static constexpr int weight() { return 1; }

    static Place archimedean() { return Place{Int(0)}; }
    static Place finite(const Int& prime);  // throws unless prime
    bool is_arch() const { return p == 0; }
    bool divides_two() const { return p == 2; }
    bool operator==(const Place& o) const { return p == o.p; }
    std::string str() const { return is_arch() ? "inf" : p.get_str(); }
};

// Primes p with |c1|_p > 1 or |c2|_p > 1, i.e. divisors of the denominators.
std::vector<Int> denominator_primes(const Rat& c1, const Rat& c2);

// splitmix64, used everywhere we need to derive independent RNG streams.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace quaddyn
