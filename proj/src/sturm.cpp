#include "yvpoly/sturm.hpp"

#include <stdexcept>
#include <utility>

#include "yvpoly/errors.hpp"

namespace yvpoly {

namespace detail {
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b, unsigned& lc_passes);
}

int SturmChain::variations_at(const Rat& x) const {
    int variations = 0;
    int prev = 0;
    for (const IntPoly& p : polys) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

SturmChain build_sturm(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("build_sturm: zero polynomial");
    if (gcd_primitive(p, derivative(p)).degree() != 0)
        throw NotSquarefreeError("build_sturm: gcd(p, p') is nonconstant");

    SturmChain chain;
    chain.polys.push_back(primitive_part(p));
    if (chain.polys.back().degree() == 0) return chain;
    chain.polys.push_back(primitive_part(derivative(p)));

    while (chain.polys.back().degree() > 0) {
        const IntPoly& a = chain.polys[chain.polys.size() - 2];
        const IntPoly& b = chain.polys.back();
        unsigned passes = 0;
        IntPoly r = detail::pseudo_remainder(a, b, passes);
        if (r.is_zero())
            throw std::logic_error("build_sturm: chain collapsed on squarefree input");
        // The true remainder is r / lc(b)^passes; negate so the stored entry
        // is a positive multiple of the Sturm entry -rem(a, b).
        bool lc_power_negative = sign(b.leading()) < 0 && passes % 2 == 1;
        chain.polys.push_back(primitive_part(lc_power_negative ? std::move(r) : -r));
    }
    return chain;
}

long count_in(const SturmChain& chain, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("count_in: requires lo < hi");
    return chain.variations_at(lo) - chain.variations_at(hi);
}

std::vector<IsolatingInterval> isolate(const IntPoly& p) {
    SturmChain chain = build_sturm(p);
    return isolate(chain, p);
}

std::vector<IsolatingInterval> isolate(const SturmChain& chain, const IntPoly& p) {
    std::vector<IsolatingInterval> out;
    if (p.degree() <= 0) return out;

    const Rat bound = cauchy_root_bound(p);
    const int v_neg = chain.variations_at(-bound);
    const int v_pos = chain.variations_at(bound);
    const long total = v_neg - v_pos;
    if (total == 0) return out;

    // The Cauchy bound certifies the total count but can be enormous for
    // large coefficients; restart the bisection from a power-of-two enclosure
    // near the Lagrange bound when that is tighter.
    Rat w;
    {
        Int two_j;
        mpz_ui_pow_ui(two_j.get_mpz_t(), 2, root_bound_log2(p));
        w = Rat(two_j);
    }
    int v_lo = v_neg, v_hi = v_pos;
    if (w < bound) {
        int cand_lo = chain.variations_at(-w);
        int cand_hi = chain.variations_at(w);
        if (cand_lo - cand_hi == total) {
            v_lo = cand_lo;
            v_hi = cand_hi;
        } else {
            w = bound;  // cannot happen for a correct bound; stay safe
        }
    } else {
        w = bound;
    }

    struct Node {
        Rat lo, hi;
        int v_lo, v_hi;
    };
    std::vector<Node> stack;
    stack.push_back({-w, w, v_lo, v_hi});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        const long count = node.v_lo - node.v_hi;
        if (count == 0) continue;
        if (count == 1) {
            out.push_back({std::move(node.lo), std::move(node.hi)});
            continue;
        }
        Rat mid = (node.lo + node.hi) / 2;
        int v_mid = chain.variations_at(mid);
        // Right first so the left half is processed first (ascending output).
        stack.push_back({mid, std::move(node.hi), v_mid, node.v_hi});
        stack.push_back({std::move(node.lo), std::move(mid), node.v_lo, v_mid});
    }
    return out;
}

IsolatingInterval refine(const IntPoly& p, const IsolatingInterval& iv,
                         const Rat& width) {
    if (sign(width) <= 0) throw std::invalid_argument("refine: width must be positive");
    Rat lo = iv.lo, hi = iv.hi;
    int s_hi = sign_at(p, hi);
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int s_mid = sign_at(p, mid);
        if (s_mid == 0) {
            // The root is exactly the midpoint; clamp a half-open sliver onto it.
            Rat new_lo = mid - width / 2;
            if (new_lo < lo) new_lo = lo;
            return {std::move(new_lo), std::move(mid)};
        }
        if (s_hi == 0 || s_mid * s_hi < 0) {
            lo = std::move(mid);  // root stays in (mid, hi]
        } else {
            hi = std::move(mid);
            s_hi = s_mid;
        }
    }
    return {std::move(lo), std::move(hi)};
}

}  // namespace yvpoly
