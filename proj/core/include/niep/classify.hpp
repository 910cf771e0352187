#pragma once

#include <optional>
#include <string>
#include <vector>

#include "niep/conditions.hpp"
#include "niep/families.hpp"
#include "niep/spectrum.hpp"

namespace niep {

enum class Problem { NIEP, D_RNIEP, SNIEP };
enum class Status { REALIZABLE, NOT_REALIZABLE, UNKNOWN };

std::string to_string(Problem p);
std::string to_string(Status s);

struct Verdict {
    Problem problem = Problem::NIEP;
    Status status = Status::UNKNOWN;
    std::optional<Certificate> certificate;
};

struct ClassifyOptions {
    int depth = 10;  // k_max = m_max for the power-sum and JLL grids
};

/// Full classification of one spectrum: every applicable condition report,
/// the partition scan (when forced reducibility makes it meaningful), and
/// one verdict per problem.
struct Classification {
    std::vector<ConditionReport> conditions;
    bool partition_scan_ran = false;
    std::vector<Bipartition> viable_partitions;
    Verdict niep;
    Verdict drniep;
    Verdict sniep;

    const Verdict& verdict(Problem p) const;
};

/// Rule pipeline, first match wins per problem:
///  (a) a violated applicable necessary condition (the symmetric bound
///      counts only against SNIEP; the diagonalizable-minimum rule for
///      (3+t, 3-t, -2, -2, -2) with 0 < t < 1 counts only against D-RNIEP),
///  (b) repeated Perron value with an empty reducibility partition scan,
///  (c) satisfied single-positive-value criterion: companion certificate,
///  (d) catalog / family instance at an admissible parameter,
///  (e) top-two shift deduction from a certified instance,
///  (f) UNKNOWN.
Classification classify(const Spectrum& sp, const ClassifyOptions& opts = {});

}  // namespace niep
