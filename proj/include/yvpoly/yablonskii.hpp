#pragma once

#include <array>
#include <filesystem>
#include <map>

#include "json.hpp"
#include "yvpoly/intpoly.hpp"

namespace yvpoly {

/// Generated Yablonskii-Vorob'ev polynomials, indexed by n.
///
/// Q_0 = 1 and Q_1 = z are always present.  Higher entries are produced on
/// demand by the defining recurrence
///
///     Q_{n+1} Q_{n-1} = z Q_n^2 - 4 (Q_n Q_n'' - (Q_n')^2),
///
/// where the division by Q_{n-1} must be exact; an inexact division aborts
/// with RecurrenceDivisionError since it can only mean broken arithmetic.
class YVCache {
public:
    YVCache();

    // Returns Q_n, generating and caching all missing intermediates.
    const IntPoly& generate(unsigned n);

    bool contains(unsigned n) const { return entries_.count(n) != 0; }
    const IntPoly& at(unsigned n) const { return entries_.at(n); }
    unsigned max_index() const { return entries_.rbegin()->first; }

    // Cache file format: {"version": 1, "polys": {"n": [coeff strings]}}.
    nlohmann::json to_json() const;
    static YVCache from_json(const nlohmann::json& j);

    // Atomic write: temp file in the target directory, then rename.
    void save(const std::filesystem::path& path) const;
    // Throws CacheError on unreadable, malformed, or invalid content.
    static YVCache load(const std::filesystem::path& path);

private:
    std::map<unsigned, IntPoly> entries_;
};

enum class StructureClass { in_z3, z_times_z3 };

/// Structural facts about Q_n, computed from the actual coefficients.
struct StructureReport {
    unsigned n = 0;
    bool monic = false;
    bool degree_ok = false;  // degree == n(n+1)/2
    bool z3_ok = false;      // support only on exponents == n(n+1)/2 (mod 3)
    StructureClass z3_class = StructureClass::in_z3;
    Int lowest_coeff;        // x_n, the lowest-degree nonzero coefficient
    int sign_at_zero = 0;

    bool all_ok() const { return monic && degree_ok && z3_ok; }
};

StructureReport verify_structure(unsigned n, YVCache& cache);

// x_n from the pure recursion x_{n+1} x_{n-1} = c_n x_n^2 with
// c_n = 2n+1, 4, -(2n+1) for n = 0, 1, 2 (mod 3); never touches polynomial
// coefficients.  Throws RecursionDivisionError on an inexact division.
Int lowest_coeff_by_recursion(unsigned n);

// sgn Q_n(0) by the mod-12 table; no polynomial computation.
int sign_at_zero_predicted(unsigned n);

// The three Wronskian-type identities tying Q_{n-1}, Q_n, Q_{n+1}; each flag
// reports an exact polynomial equality.  Requires n >= 1.
std::array<bool, 3> verify_wronskian_identities(unsigned n, YVCache& cache);

// Constancy of gcd(Q_n, Q_n'), gcd(Q_{n-1}, Q_n), gcd(Q_{n-1}, Q_{n+1}).
// Requires n >= 1.
std::array<bool, 3> coprimality_report(unsigned n, YVCache& cache);

}  // namespace yvpoly
