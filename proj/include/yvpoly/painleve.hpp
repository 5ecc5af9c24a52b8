#pragma once

#include "json.hpp"
#include "yvpoly/rational_function.hpp"
#include "yvpoly/root_census.hpp"
#include "yvpoly/yablonskii.hpp"

namespace yvpoly {

// The unique rational solution of w'' = 2w^3 + zw + n, as a reduced
// quotient: w_n = Q_{n-1}'/Q_{n-1} - Q_n'/Q_n for n >= 1, w_0 = 0, and
// w_{-n} = -w_n.
RationalFunction rational_solution(long n, YVCache& cache);

// True iff the reduced numerator of w'' - 2w^3 - zw - n vanishes
// identically.  The residual is assembled over the single common
// denominator (Q_{n-1} Q_n)^3, so the check is one exact numerator identity.
bool verify_p2(long n, YVCache& cache);

/// Pole counts of w_n split by residue sign: roots of Q_{n-1} carry residue
/// +1, roots of Q_n carry residue -1.
struct PoleCensus {
    unsigned n = 0;
    RootCensus residue_plus;   // census of Q_{n-1}
    RootCensus residue_minus;  // census of Q_n

    long total() const { return residue_plus.total + residue_minus.total; }
    long negative() const { return residue_plus.negative + residue_minus.negative; }
    long positive() const { return residue_plus.positive + residue_minus.positive; }

    nlohmann::json to_json() const;
};

// Requires n >= 1 and coprime Q_{n-1}, Q_n (CommonRootError otherwise).
PoleCensus pole_census(unsigned n, CensusEngine& engine);
PoleCensus pole_census(unsigned n, YVCache& cache);

enum class ResidueSide { plus, minus };

// Refines iv (an isolating interval of a root of Q_{n-1} for plus, Q_n for
// minus) to width <= 2^-30, then checks that (z - m) * w_n at the midpoint m
// is within 2^-10 of the expected residue, all in exact rational arithmetic.
bool residue_check(unsigned n, YVCache& cache, const IsolatingInterval& iv,
                   ResidueSide side);

}  // namespace yvpoly
