#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace yvpoly {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

// Parses "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
Rat parse_rational(const std::string& text);

// "p" when integral, otherwise "p/q".
std::string rational_to_string(const Rat& x);

// Rounded decimal rendering with `digits` places after the point.
std::string rational_to_decimal(const Rat& x, unsigned digits);

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored lowest degree first and the representation is
/// normalized: the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing.  Values are immutable after construction, so
/// they can be shared freely across threads.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(long constant) : IntPoly(Int(constant)) {}
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }
    static IntPoly variable();  // z
    static IntPoly monomial(Int coeff, unsigned exponent);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& leading() const;
    // Coefficient of z^i; zero beyond the degree.
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& c, const IntPoly& p);

    // Canonical text form: array of decimal coefficient strings, lowest
    // degree first.  The zero polynomial is the empty array.
    std::vector<std::string> to_decimal_strings() const;
    static IntPoly from_decimal_strings(const std::vector<std::string>& strings);

    // Human-readable form, e.g. "z^6 + 20z^3 - 80".
    std::string to_text(std::string_view var = "z") const;

private:
    std::vector<Int> coeffs_;
    void trim();
};

// Formal derivative iterated `order` times; order 0 returns p.
IntPoly derivative(const IntPoly& p, unsigned order = 1);

// Quotient r with q*r == p exactly.  Throws NotDivisibleError otherwise.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
Int content(const IntPoly& p);

// p divided by its content; signs preserved.
IntPoly primitive_part(const IntPoly& p);

/// Primitive greatest common divisor with positive leading coefficient.
///
/// Runs a polynomial remainder sequence with content stripping at each step.
/// A modular degree bound is consulted first: a constant gcd modulo a prime
/// that preserves both leading coefficients proves the primitive gcd is 1,
/// which skips the remainder sequence entirely in the coprime case.
IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q);

// Exact Horner evaluation.
Rat evaluate_at(const IntPoly& p, const Rat& x);

// Sign of p(x); agrees with evaluate_at but skips building the full value.
int sign_at(const IntPoly& p, const Rat& x);

// B = 1 + max_i |a_i|/|a_d|; every real root lies in (-B, B).
// Throws DegreeZeroError for constants.
Rat cauchy_root_bound(const IntPoly& p);

// Smallest j such that all roots certainly lie in (-2^j, 2^j), from the
// Lagrange-Zassenhaus bound 2 * max |a_{d-i}/a_d|^{1/i}.  Requires degree >= 1.
unsigned long root_bound_log2(const IntPoly& p);

}  // namespace yvpoly
