#pragma once

#include <vector>

#include "yvpoly/intpoly.hpp"

namespace yvpoly {

/// Sturm chain of a squarefree polynomial.
///
/// polys[0] is the (content-stripped) target, polys[1] its derivative, and
/// each further entry is the negated remainder of the previous two, up to a
/// positive scale factor.  The chain ends at a nonzero constant.  Sign
/// variations V(x) therefore satisfy the classical count: the number of
/// distinct real roots in (lo, hi] equals V(lo) - V(hi).
struct SturmChain {
    std::vector<IntPoly> polys;

    // Sign variations of the chain evaluated at x, zeros skipped.
    int variations_at(const Rat& x) const;
};

// Throws NotSquarefreeError when gcd(p, p') is nonconstant.
SturmChain build_sturm(const IntPoly& p);

// Number of distinct real roots of the chain's target in (lo, hi].
long count_in(const SturmChain& chain, const Rat& lo, const Rat& hi);

/// Half-open interval (lo, hi] certified to contain exactly one real root.
struct IsolatingInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo < x && x <= hi; }
    bool disjoint_from(const IsolatingInterval& other) const {
        return hi <= other.lo || other.hi <= lo;
    }
};

// One interval per real root, pairwise disjoint and in increasing order,
// obtained by bisecting the Cauchy enclosure at dyadic midpoints.  Requires
// p squarefree (NotSquarefreeError otherwise).
std::vector<IsolatingInterval> isolate(const IntPoly& p);

// Variant reusing an existing chain of p.
std::vector<IsolatingInterval> isolate(const SturmChain& chain, const IntPoly& p);

// Shrinks iv to width <= `width` by sign-change bisection; returns iv
// unchanged when it is already narrow enough.  Requires that iv isolates a
// simple root of p.
IsolatingInterval refine(const IntPoly& p, const IsolatingInterval& iv,
                         const Rat& width);

}  // namespace yvpoly
