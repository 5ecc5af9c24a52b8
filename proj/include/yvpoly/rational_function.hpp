#pragma once

#include <optional>
#include <string>

#include "yvpoly/intpoly.hpp"

namespace yvpoly {

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: numerator and denominator have constant gcd, the
/// denominator is nonzero with positive leading coefficient, and zero is
/// 0/1.  Integer content is reduced across the fraction, so e.g. 2z/2
/// normalizes to z/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPoly::one()) {}
    explicit RationalFunction(IntPoly numerator)
        : num_(std::move(numerator)), den_(IntPoly::one()) {}
    RationalFunction(IntPoly numerator, IntPoly denominator);

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction constant(const Int& k) {
        return RationalFunction(IntPoly(k));
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction&) const = default;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a,
                                      const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a,
                                      const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a,
                                      const RationalFunction& b);

    std::string to_text(std::string_view var = "z") const;

private:
    IntPoly num_;
    IntPoly den_;
    void reduce();
};

// Exact quotient-rule derivative, reduced.
RationalFunction derivative(const RationalFunction& f);

// f(x), or nullopt when x is a pole (denominator vanishes exactly).
std::optional<Rat> evaluate_at(const RationalFunction& f, const Rat& x);

}  // namespace yvpoly
