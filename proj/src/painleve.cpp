#include "yvpoly/painleve.hpp"

#include <cstdlib>
#include <stdexcept>

#include "yvpoly/errors.hpp"

namespace yvpoly {

RationalFunction rational_solution(long n, YVCache& cache) {
    if (n == 0) return RationalFunction::zero();
    const unsigned m = static_cast<unsigned>(std::labs(n));
    const IntPoly& a = cache.generate(m - 1);
    const IntPoly& b = cache.generate(m);
    IntPoly num = derivative(a) * b - a * derivative(b);
    RationalFunction w(std::move(num), a * b);
    return n > 0 ? w : -w;
}

bool verify_p2(long n, YVCache& cache) {
    // Residual numerator of w'' - 2w^3 - zw - n over the common denominator
    // D^3, with w = N/D:
    //     w''  = (M'D - 2MD') / D^3   where M = N'D - ND',
    // so the identity holds iff
    //     M'D - 2MD' - 2N^3 - zND^2 - nD^3 == 0.
    IntPoly num, den = IntPoly::one();
    if (n != 0) {
        const unsigned m = static_cast<unsigned>(std::labs(n));
        const IntPoly& a = cache.generate(m - 1);
        const IntPoly& b = cache.generate(m);
        num = derivative(a) * b - a * derivative(b);
        if (n < 0) num = -num;
        den = a * b;
    }
    const IntPoly dn = derivative(num);
    const IntPoly dd = derivative(den);
    const IntPoly mid = dn * den - num * dd;
    const IntPoly den2 = den * den;
    IntPoly residual = derivative(mid) * den - Int(2) * (mid * dd);
    residual = residual - Int(2) * (num * num * num);
    residual = residual - IntPoly::variable() * (num * den2);
    residual = residual - Int(n) * (den2 * den);
    return residual.is_zero();
}

nlohmann::json PoleCensus::to_json() const {
    return nlohmann::json{
        {"n", n},
        {"residue_plus", residue_plus.to_json()},
        {"residue_minus", residue_minus.to_json()},
        {"total", total()},
        {"negative", negative()},
        {"positive", positive()},
    };
}

PoleCensus pole_census(unsigned n, CensusEngine& engine) {
    if (n < 1) throw std::invalid_argument("pole_census: n >= 1");
    const IntPoly& a = engine.cache().generate(n - 1);
    const IntPoly& b = engine.cache().generate(n);
    if (gcd_primitive(a, b).degree() != 0)
        throw CommonRootError("pole_census: Q_{n-1} and Q_n share a root");
    PoleCensus pc;
    pc.n = n;
    pc.residue_plus = engine.census(n - 1);
    pc.residue_minus = engine.census(n);
    return pc;
}

PoleCensus pole_census(unsigned n, YVCache& cache) {
    CensusEngine engine(cache);
    return pole_census(n, engine);
}

bool residue_check(unsigned n, YVCache& cache, const IsolatingInterval& iv,
                   ResidueSide side) {
    if (n < 1) throw std::invalid_argument("residue_check: n >= 1");
    const IntPoly& poly =
        side == ResidueSide::plus ? cache.generate(n - 1) : cache.generate(n);

    auto inv_pow2 = [](unsigned long k) {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
        Rat r(Int(1), d);
        r.canonicalize();
        return r;
    };
    // Tighten the enclosure well below the probe offset so the midpoint
    // error is negligible against it.
    const Rat width = inv_pow2(40);
    const Rat offset = inv_pow2(20);
    const Rat tolerance = inv_pow2(10);

    IsolatingInterval tight = refine(poly, iv, width);
    const Rat m = tight.midpoint();

    // (z - m) * w_n, probed just off the pole enclosure.  Substituting the
    // midpoint itself would annihilate the factor, so the probe point is
    // m + 2^-20: far outside the 2^-40 enclosure, far inside the distance to
    // any neighboring pole.
    RationalFunction w = rational_solution(static_cast<long>(n), cache);
    std::vector<Int> lin = {Int(-m.get_num()), Int(m.get_den())};
    RationalFunction factor(IntPoly(std::move(lin)), IntPoly(Int(m.get_den())));
    RationalFunction probe = factor * w;

    const Rat x = m + offset;
    std::optional<Rat> value = evaluate_at(probe, x);
    if (!value) return false;
    const Rat target(side == ResidueSide::plus ? 1 : -1);
    Rat err = *value - target;
    return abs(err) <= tolerance;
}

}  // namespace yvpoly
