#pragma once

#include <string>
#include <utility>
#include <vector>

#include "niep/poly.hpp"
#include "niep/roots.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Outcome of one necessary/sufficient condition check, with the exact
/// values substantiating it.
struct ConditionReport {
    std::string condition;
    bool applicable = false;
    bool satisfied = false;
    /// Named exact values (violating indices, inequality sides, ...).
    std::vector<std::pair<std::string, Rational>> witness;
    std::string note;

    bool violated() const { return applicable && !satisfied; }
};

/// max{|lambda_i|} must be attained by the largest (nonnegative) entry.
ConditionReport check_perron(const Spectrum& sp);

/// s_k >= 0 for k = 1..k_max; the witness names the first violating k.
ConditionReport check_power_sums(const Spectrum& sp, int k_max);

/// n^(m-1) * s_{km} >= s_k^m for all k <= k_max, m <= m_max.
ConditionReport check_jll(const Spectrum& sp, int k_max, int m_max);

/// Refined inequality 4*s_4 >= s_2^2 for five values summing to zero.
ConditionReport check_lm_trace_zero(const Spectrum& sp);

/// Extreme-matrix bound 4*s_4 - s_2^2 + s_1^2*s_2 - s_1^4/2 >= 0 (n = 5).
ConditionReport check_extreme(const Spectrum& sp);

/// Symmetric-realization bound lambda_2 + lambda_5 <= trace (n = 5).
ConditionReport check_mn_symmetric(const Spectrum& sp);

/// One positive value: realizable iff the sum is nonnegative
/// (sufficient for realizability, not only necessary).
ConditionReport check_suleimanova(const Spectrum& sp);

/// One unordered split into two nonempty sublists, both sorted descending;
/// part1 carries the original largest value.
struct Bipartition {
    std::vector<Rational> part1;
    std::vector<Rational> part2;
};

/// Enumerates all 2^(n-1) - 1 bipartitions and keeps those where both
/// parts pass Perron, power sums (k <= 6) and the JLL grid (k, m <= 6).
/// Viability is necessary-only: an empty result disproves reducible
/// realizability, a nonempty one proves nothing.
std::vector<Bipartition> reducible_partition_scan(const Spectrum& sp);

/// Root audit of the extreme-matrix inequality specialized to
/// (3+t, 3, -2, -2, -2): isolates the smallest nonnegative root of the
/// resulting quartic in t and compares against the reference decimal
/// 0.39671, flagging a discrepancy beyond 1e-3 instead of altering the
/// formula.
struct ExtremeAuditRecord {
    Poly quartic;                 // lhs of the inequality as a polynomial in t
    IsolatingInterval root;       // smallest nonnegative root, width <= 1e-12
    Rational reference;           // 39671/100000
    Rational abs_diff;            // |root midpoint - reference|
    bool discrepancy = false;     // abs_diff > 1e-3
};

ExtremeAuditRecord sigma_t_extreme_audit();

}  // namespace niep
