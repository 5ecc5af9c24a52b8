#include "yvpoly/rational_function.hpp"

#include <stdexcept>
#include <utility>

#include "yvpoly/errors.hpp"

namespace yvpoly {

RationalFunction::RationalFunction(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    reduce();
}

void RationalFunction::reduce() {
    if (den_.is_zero())
        throw std::invalid_argument("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = gcd_primitive(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Int c;
    mpz_gcd(c.get_mpz_t(), content(num_).get_mpz_t(), content(den_).get_mpz_t());
    if (c > 1) {
        num_ = exact_div(num_, IntPoly(c));
        den_ = exact_div(den_, IntPoly(c));
    }
    if (sign(den_.leading()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Combine over the lcm of the denominators to keep the final reduction
    // against an already-coprime pair in the common case.
    IntPoly g = gcd_primitive(a.den_, b.den_);
    if (g.degree() == 0)
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_,
                                a.den_ * b.den_);
    IntPoly da = exact_div(a.den_, g);
    IntPoly db = exact_div(b.den_, g);
    return RationalFunction(a.num_ * db + b.num_ * da, a.den_ * db);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_text(std::string_view var) const {
    if (den_ == IntPoly::one()) return num_.to_text(var);
    return "(" + num_.to_text(var) + ")/(" + den_.to_text(var) + ")";
}

RationalFunction derivative(const RationalFunction& f) {
    const IntPoly dn = derivative(f.num(), 1);
    const IntPoly dd = derivative(f.den(), 1);
    return RationalFunction(dn * f.den() - f.num() * dd, f.den() * f.den());
}

std::optional<Rat> evaluate_at(const RationalFunction& f, const Rat& x) {
    if (sign_at(f.den(), x) == 0) return std::nullopt;
    Rat n = evaluate_at(f.num(), x);
    Rat d = evaluate_at(f.den(), x);
    Rat r = n / d;
    r.canonicalize();
    return r;
}

}  // namespace yvpoly
