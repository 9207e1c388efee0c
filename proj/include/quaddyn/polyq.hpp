#pragma once

// Dense univariate polynomials over Q: iteration of f_c(z) = z^2 + c,
// preperiodicity polynomials, exact gcd (modular), squarefree part and
// rational roots.

#include <string>
#include <vector>

#include "quaddyn/rational.hpp"

namespace quaddyn {

class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs);  // lowest degree first

    static PolyQ zero() { return PolyQ(); }
    static PolyQ constant(const Rat& c);
    static PolyQ identity();  // z

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(size_t i) const;
    const Rat& lead() const;

    Rat eval(const Rat& x) const;
    PolyQ derivative() const;
    PolyQ monic() const;

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ scale(const Rat& s) const;

    // Euclidean division; remainder has degree < deg(d).
    std::pair<PolyQ, PolyQ> divrem(const PolyQ& d) const;
    // Exact division; throws if the remainder is nonzero.
    PolyQ divide_exact(const PolyQ& d) const;
    bool divides(const PolyQ& multiple) const;

    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    std::vector<std::string> coeff_strings() const;
    static PolyQ from_coeff_strings(const std::vector<std::string>& s);

private:
    std::vector<Rat> c_;
    void normalize();
};

// f_c^n(z), degree 2^n; f_c^0 = z.  n >= 0.
PolyQ iterate_poly(const Rat& c, int n);

// P_{m,n} = f_c^{m+n} - f_c^m, degree 2^{m+n}.  n >= 1, m >= 0.
PolyQ preper_poly(const Rat& c, int m, int n);

// Monic gcd over Q via modular images with CRT and exact verification.
PolyQ gcd_poly(const PolyQ& a, const PolyQ& b);

// Monic lcm (through the gcd).
PolyQ lcm_poly(const PolyQ& a, const PolyQ& b);

// Monic polynomial with the same roots, all simple: a / gcd(a, a').
PolyQ squarefree_part(const PolyQ& a);

// Exactly the rational roots, sorted ascending.
std::vector<Rat> rational_roots(const PolyQ& a);

}  // namespace quaddyn
