#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "yvpoly/sturm.hpp"
#include "yvpoly/yablonskii.hpp"

namespace yvpoly {

/// Real-root census of Q_n: counts split by sign plus enclosures of the
/// extreme roots.
struct RootCensus {
    unsigned n = 0;
    long total = 0;
    long negative = 0;
    long positive = 0;
    bool has_zero_root = false;
    std::optional<IsolatingInterval> min_root;
    std::optional<IsolatingInterval> max_root;

    nlohmann::json to_json() const;
};

/// Computes and memoizes censuses over a shared polynomial cache.
///
/// Q_n always has support on exponents congruent to n(n+1)/2 mod 3, so after
/// splitting off a possible root at zero the census runs its Sturm chain on
/// the compressed polynomial R with R(z^3) = Q_n / z^r.  The cube map is a
/// strictly increasing bijection of the real line, so counts transfer
/// directly; isolating intervals are pulled back through exact rational
/// cube-root enclosures and certified by sign changes and pairwise
/// disjointness on the uncompressed polynomial.
class CensusEngine {
public:
    explicit CensusEngine(YVCache& cache) : cache_(cache) {}

    const RootCensus& census(unsigned n);

    // All isolating intervals of Q_n in increasing order, one per real root
    // (the zero root's interval included).
    const std::vector<IsolatingInterval>& intervals(unsigned n);

    // flag 1: total == floor((n+1)/2)
    // flag 2: negative == floor((n+1)/3) and positive matches the parity split
    std::pair<bool, bool> verify_count_theorems(unsigned n);

    // flag 1: the refined isolating intervals of Q_{n-1} and Q_{n+1} merge
    //         into a strictly alternating order that starts and ends with a
    //         Q_{n+1} root
    // flag 2: min/max strict inclusion (vacuous when Z_{n-1} is empty)
    // Throws CommonRootError if gcd(Q_{n-1}, Q_{n+1}) is nonconstant.
    std::pair<bool, bool> verify_interlacing(unsigned n);

    YVCache& cache() { return cache_; }

private:
    struct Entry {
        RootCensus census;
        IntPoly carrier;  // Q_n with any zero root divided out
        std::vector<IsolatingInterval> intervals;
        std::optional<std::size_t> zero_index;
    };

    Entry& entry(unsigned n);
    Entry compute(unsigned n);
    void refine_interval(Entry& e, std::size_t idx, const Rat& width);

    YVCache& cache_;
    std::map<unsigned, Entry> memo_;
};

// Stateless one-shot forms of the operations above.
RootCensus census(unsigned n, YVCache& cache);
std::pair<bool, bool> verify_count_theorems(unsigned n, YVCache& cache);
std::pair<bool, bool> verify_interlacing(unsigned n, YVCache& cache);

// Theorem-side formulas.
inline long predicted_total(unsigned n) { return (n + 1) / 2; }
inline long predicted_negative(unsigned n) { return (n + 1) / 3; }
inline long predicted_positive(unsigned n) {
    return n % 2 == 0 ? n / 6 : (n + 3) / 6;
}

}  // namespace yvpoly
