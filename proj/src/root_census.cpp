#include "yvpoly/root_census.hpp"

#include <algorithm>
#include <stdexcept>

#include "yvpoly/errors.hpp"

namespace yvpoly {

namespace {

nlohmann::json interval_json(const std::optional<IsolatingInterval>& iv) {
    if (!iv) return nullptr;
    return nlohmann::json::array(
        {rational_to_string(iv->lo), rational_to_string(iv->hi)});
}

Int icbrt_floor(const Int& x) {
    Int r;
    if (sign(x) >= 0) {
        mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3);
        return r;
    }
    Int m = -x;
    int exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3);
    if (!exact) r += 1;
    return -r;
}

// l <= cbrt(a) <= h with h - l <= 1/(den(a) * 2^prec_bits).
std::pair<Rat, Rat> cbrt_enclosure(const Rat& a, unsigned long prec_bits) {
    Int num(a.get_num()), den(a.get_den());
    Int shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 2, 3 * prec_bits);
    Int x = num * den * den * shift;
    Int lo_int = icbrt_floor(x);
    Int hi_int = (lo_int * lo_int * lo_int == x) ? lo_int : Int(lo_int + 1);
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, prec_bits);
    d *= den;
    Rat l(lo_int, d), h(hi_int, d);
    l.canonicalize();
    h.canonicalize();
    return {std::move(l), std::move(h)};
}

bool has_cubic_support(const IntPoly& p) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (i % 3 != 0 && sign(p.coeffs()[i]) != 0) return false;
    return true;
}

IntPoly compress_cubic(const IntPoly& p) {
    std::vector<Int> c(p.coeffs().size() / 3 + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(3 * i);
    return IntPoly(std::move(c));
}

// Splits intervals straddling zero onto one side and then refines until
// every interval over a negative root has hi < 0.  `chain` isolates-counts
// for `p`; both refer to the same (zero-free) polynomial.
void make_sign_strict(const SturmChain& chain, const IntPoly& p,
                      std::vector<IsolatingInterval>& ivs) {
    const Rat zero(0);
    for (auto& iv : ivs) {
        if (sign(iv.lo) < 0 && sign(iv.hi) > 0) {
            if (count_in(chain, iv.lo, zero) == 1)
                iv.hi = zero;
            else
                iv.lo = zero;
        }
        while (sign(iv.lo) < 0 && sign(iv.hi) >= 0)
            iv = refine(p, iv, iv.width() / 2);
    }
}

// Opens a strict gap between consecutive intervals (needed before mapping
// through cube-root enclosures, which widen endpoints slightly).
void make_gapped(const IntPoly& p, std::vector<IsolatingInterval>& ivs) {
    for (int guard = 0; guard < 256; ++guard) {
        bool touched = false;
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
            if (ivs[i].hi >= ivs[i + 1].lo) {
                touched = true;
                ivs[i] = refine(p, ivs[i], ivs[i].width() / 2);
                ivs[i + 1] = refine(p, ivs[i + 1], ivs[i + 1].width() / 2);
            }
        }
        if (!touched) return;
    }
    throw std::logic_error("make_gapped: intervals failed to separate");
}

}  // namespace

nlohmann::json RootCensus::to_json() const {
    return nlohmann::json{
        {"n", n},           {"total", total},
        {"negative", negative}, {"positive", positive},
        {"zero", has_zero_root}, {"min", interval_json(min_root)},
        {"max", interval_json(max_root)},
    };
}

CensusEngine::Entry& CensusEngine::entry(unsigned n) {
    auto hit = memo_.find(n);
    if (hit != memo_.end()) return hit->second;
    return memo_.emplace(n, compute(n)).first->second;
}

CensusEngine::Entry CensusEngine::compute(unsigned n) {
    const IntPoly& q = cache_.generate(n);
    Entry e;
    e.census.n = n;
    e.carrier = q;
    if (q.degree() <= 0) return e;  // Q_0 = 1: no roots

    const bool zero_root = sign(q.coeff(0)) == 0;
    IntPoly s = zero_root ? exact_div(q, IntPoly::variable()) : q;
    e.carrier = s;

    long neg = 0, pos = 0;
    std::vector<IsolatingInterval> ivs;
    if (s.degree() >= 1) {
        const Rat zero(0);
        if (has_cubic_support(s)) {
            const IntPoly r = compress_cubic(s);
            SturmChain chain = build_sturm(r);
            const Rat bound = cauchy_root_bound(r);
            const int v_lo = chain.variations_at(-bound);
            const int v_zero = chain.variations_at(zero);
            const int v_hi = chain.variations_at(bound);
            neg = v_lo - v_zero;
            pos = v_zero - v_hi;

            std::vector<IsolatingInterval> u_ivs = isolate(chain, r);
            make_sign_strict(chain, r, u_ivs);
            make_gapped(r, u_ivs);

            // Pull the intervals back through z -> z^3 at increasing
            // precision until the enclosures are disjoint, stay on their
            // side of zero, and certify a sign change on the carrier.
            unsigned long prec = 8;
            for (int guard = 0;; ++guard) {
                if (guard > 64)
                    throw std::logic_error("census: cube-root mapping failed to certify");
                ivs.clear();
                for (const auto& u : u_ivs) {
                    Rat l = cbrt_enclosure(u.lo, prec).first;
                    Rat h = cbrt_enclosure(u.hi, prec).second;
                    ivs.push_back({std::move(l), std::move(h)});
                }
                bool ok = true;
                for (std::size_t i = 0; ok && i < ivs.size(); ++i) {
                    const auto& u = u_ivs[i];
                    const auto& zv = ivs[i];
                    if (sign(u.hi) < 0 && sign(zv.hi) >= 0) ok = false;
                    if (i + 1 < ivs.size() && !(zv.hi < ivs[i + 1].lo)) ok = false;
                    if (ok && sign_at(s, zv.lo) * sign_at(s, zv.hi) >= 0) ok = false;
                }
                if (ok) break;
                prec *= 2;
            }
        } else {
            SturmChain chain = build_sturm(s);
            const Rat bound = cauchy_root_bound(s);
            neg = chain.variations_at(-bound) - chain.variations_at(zero);
            pos = chain.variations_at(zero) - chain.variations_at(bound);
            ivs = isolate(chain, s);
            make_sign_strict(chain, s, ivs);
        }
        if (static_cast<long>(ivs.size()) != neg + pos)
            throw std::logic_error("census: interval count disagrees with variation counts");
    }

    if (zero_root) {
        Rat eps(1);
        const std::size_t at = static_cast<std::size_t>(neg);
        if (at > 0 && -ivs[at - 1].hi < eps) eps = -ivs[at - 1].hi;
        ivs.insert(ivs.begin() + static_cast<std::ptrdiff_t>(at),
                   IsolatingInterval{-eps, Rat(0)});
        e.zero_index = at;
    }

    e.census.total = neg + pos + (zero_root ? 1 : 0);
    e.census.negative = neg;
    e.census.positive = pos;
    e.census.has_zero_root = zero_root;
    if (!ivs.empty()) {
        e.census.min_root = ivs.front();
        e.census.max_root = ivs.back();
    }
    e.intervals = std::move(ivs);
    return e;
}

const RootCensus& CensusEngine::census(unsigned n) { return entry(n).census; }

const std::vector<IsolatingInterval>& CensusEngine::intervals(unsigned n) {
    return entry(n).intervals;
}

std::pair<bool, bool> CensusEngine::verify_count_theorems(unsigned n) {
    const RootCensus& c = census(n);
    bool total_ok = c.total == predicted_total(n);
    bool split_ok = c.negative == predicted_negative(n) &&
                    c.positive == predicted_positive(n);
    return {total_ok, split_ok};
}

void CensusEngine::refine_interval(Entry& e, std::size_t idx, const Rat& width) {
    IsolatingInterval& iv = e.intervals[idx];
    if (e.zero_index && *e.zero_index == idx) {
        // The root is pinned at hi = 0; shrinking is pure endpoint arithmetic.
        if (-iv.lo > width) iv.lo = -width;
        return;
    }
    iv = refine(e.carrier, iv, width);
}

std::pair<bool, bool> CensusEngine::verify_interlacing(unsigned n) {
    if (n < 1) throw std::invalid_argument("verify_interlacing: n >= 1");
    const IntPoly& below = cache_.generate(n - 1);
    const IntPoly& above = cache_.generate(n + 1);
    if (gcd_primitive(below, above).degree() != 0)
        throw CommonRootError("verify_interlacing: Q_{n-1} and Q_{n+1} share a root");

    entry(n - 1);
    entry(n + 1);
    Entry& lower = memo_.at(n - 1);
    Entry& upper = memo_.at(n + 1);

    // Refine across the two lists until every pair is disjoint; terminates
    // because the polynomials share no roots.
    for (int guard = 0;; ++guard) {
        if (guard > 256)
            throw std::logic_error("verify_interlacing: refinement failed to separate");
        bool overlap = false;
        for (std::size_t i = 0; i < lower.intervals.size(); ++i) {
            for (std::size_t j = 0; j < upper.intervals.size(); ++j) {
                if (lower.intervals[i].disjoint_from(upper.intervals[j])) continue;
                overlap = true;
                refine_interval(lower, i, lower.intervals[i].width() / 2);
                refine_interval(upper, j, upper.intervals[j].width() / 2);
            }
        }
        if (!overlap) break;
    }

    struct Tagged {
        const IsolatingInterval* iv;
        bool from_upper;
    };
    std::vector<Tagged> merged;
    for (const auto& iv : lower.intervals) merged.push_back({&iv, false});
    for (const auto& iv : upper.intervals) merged.push_back({&iv, true});
    std::sort(merged.begin(), merged.end(), [](const Tagged& a, const Tagged& b) {
        return a.iv->lo < b.iv->lo;
    });

    bool alternates = !merged.empty() && merged.front().from_upper &&
                      merged.back().from_upper;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].from_upper == merged[i + 1].from_upper) alternates = false;

    bool minmax_ok = lower.intervals.empty() ||
                     (!merged.empty() && merged.front().from_upper &&
                      merged.back().from_upper);
    return {alternates, minmax_ok};
}

RootCensus census(unsigned n, YVCache& cache) {
    CensusEngine engine(cache);
    return engine.census(n);
}

std::pair<bool, bool> verify_count_theorems(unsigned n, YVCache& cache) {
    CensusEngine engine(cache);
    return engine.verify_count_theorems(n);
}

std::pair<bool, bool> verify_interlacing(unsigned n, YVCache& cache) {
    CensusEngine engine(cache);
    return engine.verify_interlacing(n);
}

}  // namespace yvpoly
