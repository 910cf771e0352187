#include "niep/classify.hpp"

#include <algorithm>

#include "niep/verify.hpp"

namespace niep {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::NIEP: return "NIEP";
        case Problem::D_RNIEP: return "D-RNIEP";
        case Problem::SNIEP: return "SNIEP";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::REALIZABLE: return "REALIZABLE";
        case Status::NOT_REALIZABLE: return "NOT_REALIZABLE";
        case Status::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

const Verdict& Classification::verdict(Problem p) const {
    switch (p) {
        case Problem::NIEP: return niep;
        case Problem::D_RNIEP: return drniep;
        case Problem::SNIEP: return sniep;
    }
    return niep;
}

namespace {

Certificate violation_cert(const ConditionReport& rep) {
    Certificate c;
    c.kind = Certificate::Kind::Violation;
    c.source = rep.condition;
    c.violation = rep;
    return c;
}

/// Exact pattern (3+t, 3-t, -2, -2, -2) with 0 < t < 1 after sorting.
std::optional<Rational> diagonalizable_minimum_t(const Spectrum& sp) {
    if (sp.n() != 5) return std::nullopt;
    const Rational minus_two(-2);
    for (int i = 2; i < 5; ++i)
        if (sp[i] != minus_two) return std::nullopt;
    const Rational t = sp[0] - Rational(3);
    if (!(sp[1] == Rational(3) - t)) return std::nullopt;
    if (t.sign() <= 0 || t >= Rational(1)) return std::nullopt;
    return t;
}

/// Family instance match: same multiset as the family target at
/// t = lambda_1 - (family lambda_1 at 0), checked exactly.
std::optional<Rational> family_parameter(const MatrixFamily& f, const Spectrum& sp) {
    if (sp.n() != f.dim()) return std::nullopt;
    if (f.target()[0].slope.is_zero()) return std::nullopt;
    const Rational t = (sp[0] - f.target()[0].constant) / f.target()[0].slope;
    if (t.sign() <= 0) return std::nullopt;
    if (!(f.target_at(t) == sp)) return std::nullopt;
    return t;
}

struct RealizableFinds {
    std::optional<Certificate> general;       // any realizing matrix
    std::optional<Certificate> diagonalizable;
    std::optional<Certificate> symmetric;
};

void record(RealizableFinds& finds, const Certificate& cert, bool diag, bool sym) {
    if (!finds.general) finds.general = cert;
    if (diag && !finds.diagonalizable) finds.diagonalizable = cert;
    if (sym && !finds.symmetric) finds.symmetric = cert;
}

/// Rule (d): families first (certificates carry the instantiated matrix),
/// then the fixed catalog.
RealizableFinds find_instances(const Spectrum& sp) {
    RealizableFinds finds;

    for (const MatrixFamily* f : all_families()) {
        const auto t = family_parameter(*f, sp);
        if (!t) continue;
        if (!f->admissible(*t)) continue;
        MatrixQ m = f->eval(*t);
        const VerificationReport rep = verify_spectrum(m, sp);
        if (!rep.ok()) continue;  // family invariant violated; do not certify
        Certificate cert;
        cert.kind = Certificate::Kind::Matrix;
        cert.source = "family:" + f->name();
        cert.parameter = *t;
        cert.matrix = std::move(m);
        record(finds, cert, rep.diagonalizable, rep.symmetric);
    }

    for (const CatalogEntry& e : catalog()) {
        if (!(e.claimed_spectrum == sp)) continue;
        Certificate cert;
        cert.kind = Certificate::Kind::Matrix;
        cert.source = "catalog:" + e.name;
        cert.matrix = std::visit([](const auto& m) {
            return std::variant<std::monostate, MatrixQ, MatrixQuad>(m);
        }, e.matrix);
        record(finds, cert, e.diagonalizable, e.symmetric);
    }

    return finds;
}

/// Rule (e): search for a certified base (mu1 - u, mu2 - u, rest), u >= 0.
std::optional<Certificate> guo_deduction(const Spectrum& sp) {
    if (sp.n() < 2) return std::nullopt;

    // family bases: tail must match the family tail exactly
    for (const MatrixFamily* f : all_families()) {
        if (sp.n() != f->dim()) continue;
        bool tail_ok = true;
        std::vector<Rational> tail;
        for (size_t i = 2; i < f->target().size(); ++i) tail.push_back(f->target()[i].constant);
        std::sort(tail.begin(), tail.end(), [](const Rational& a, const Rational& b) { return b < a; });
        for (int i = 2; i < sp.n() && tail_ok; ++i) tail_ok = (sp[i] == tail[i - 2]);
        if (!tail_ok) continue;

        // base lambda1 + lambda2 is constant in t for these families
        const Rational pair_sum = f->target()[0].constant + f->target()[1].constant;
        const Rational u = (sp[0] + sp[1] - pair_sum) / Rational(2);
        const Rational s = (sp[0] - sp[1]) / Rational(2);
        if (u.sign() <= 0 || s.sign() <= 0) continue;
        if (!f->admissible(s)) continue;

        MatrixQ base_matrix = f->eval(s);
        const Spectrum base = f->target_at(s);
        if (!verify_spectrum(base_matrix, base).ok()) continue;

        Certificate base_cert;
        base_cert.kind = Certificate::Kind::Matrix;
        base_cert.source = "family:" + f->name();
        base_cert.parameter = s;
        base_cert.matrix = std::move(base_matrix);
        CertifiedSpectrum shifted = guo_extend(CertifiedSpectrum{base, std::move(base_cert)}, u);
        if (!(shifted.spectrum == sp)) continue;
        return shifted.certificate;
    }

    for (const CatalogEntry& e : catalog()) {
        if (e.claimed_spectrum.n() != sp.n()) continue;
        const Rational u = sp[0] - e.claimed_spectrum[0];
        if (u.sign() <= 0) continue;
        if (!(sp[1] == e.claimed_spectrum[1] + u)) continue;
        bool tail_ok = true;
        for (int i = 2; i < sp.n() && tail_ok; ++i) tail_ok = (sp[i] == e.claimed_spectrum[i]);
        if (!tail_ok) continue;

        Certificate base_cert;
        base_cert.kind = Certificate::Kind::Matrix;
        base_cert.source = "catalog:" + e.name;
        CertifiedSpectrum shifted =
            guo_extend(CertifiedSpectrum{e.claimed_spectrum, std::move(base_cert)}, u);
        if (!(shifted.spectrum == sp)) continue;
        return shifted.certificate;
    }

    return std::nullopt;
}

}  // namespace

Classification classify(const Spectrum& sp, const ClassifyOptions& opts) {
    Classification out;
    out.niep.problem = Problem::NIEP;
    out.drniep.problem = Problem::D_RNIEP;
    out.sniep.problem = Problem::SNIEP;

    // necessary conditions for every problem
    std::vector<ConditionReport> shared = {
        check_perron(sp),
        check_power_sums(sp, opts.depth),
        check_jll(sp, opts.depth, opts.depth),
        check_lm_trace_zero(sp),
        check_extreme(sp),
    };
    const ConditionReport mn = check_mn_symmetric(sp);
    const ConditionReport sul = check_suleimanova(sp);

    out.conditions = shared;
    out.conditions.push_back(mn);
    out.conditions.push_back(sul);

    // a repeated Perron value forces reducibility: run the scan up front so
    // its outcome is reported alongside any condition violation
    if (sp.n() >= 2 && sp.leading_multiplicity() >= 2) {
        out.partition_scan_ran = true;
        out.viable_partitions = reducible_partition_scan(sp);
    }

    // (a) violated necessary conditions
    for (const auto& rep : shared) {
        if (rep.violated()) {
            const auto cert = violation_cert(rep);
            out.niep = {Problem::NIEP, Status::NOT_REALIZABLE, cert};
            out.drniep = {Problem::D_RNIEP, Status::NOT_REALIZABLE, cert};
            out.sniep = {Problem::SNIEP, Status::NOT_REALIZABLE, cert};
            return out;
        }
    }
    if (mn.violated())
        out.sniep = {Problem::SNIEP, Status::NOT_REALIZABLE, violation_cert(mn)};
    if (const auto t = diagonalizable_minimum_t(sp)) {
        Certificate cert;
        cert.kind = Certificate::Kind::Deduction;
        cert.source = "diagonalizable_minimum_t";
        cert.parameter = *t;
        cert.detail = "(3+t, 3-t, -2, -2, -2) with t = " + t->str() +
                      " < 1 admits no diagonalizable realization";
        out.drniep = {Problem::D_RNIEP, Status::NOT_REALIZABLE, cert};
    }

    // (b) forced reducibility with an exhausted partition scan
    if (out.partition_scan_ran) {
        if (out.viable_partitions.empty()) {
            Certificate cert;
            cert.kind = Certificate::Kind::PartitionScan;
            cert.source = "reducible_partition_scan";
            cert.detail = "repeated Perron value forces reducibility, but no bipartition "
                          "passes the necessary conditions";
            out.niep = {Problem::NIEP, Status::NOT_REALIZABLE, cert};
            if (out.drniep.status == Status::UNKNOWN)
                out.drniep = {Problem::D_RNIEP, Status::NOT_REALIZABLE, cert};
            if (out.sniep.status == Status::UNKNOWN)
                out.sniep = {Problem::SNIEP, Status::NOT_REALIZABLE, cert};
            return out;
        }
    }

    // (c) single positive value with nonnegative sum
    if (out.niep.status == Status::UNKNOWN && sul.applicable && sul.satisfied) {
        Certificate cert;
        cert.kind = Certificate::Kind::Matrix;
        cert.source = "suleimanova_companion";
        cert.matrix = suleimanova_companion(sp);
        out.niep = {Problem::NIEP, Status::REALIZABLE, cert};
    }

    // (d) catalog / family instances
    const RealizableFinds finds = find_instances(sp);
    if (out.niep.status == Status::UNKNOWN && finds.general)
        out.niep = {Problem::NIEP, Status::REALIZABLE, finds.general};
    if (out.drniep.status == Status::UNKNOWN && finds.diagonalizable)
        out.drniep = {Problem::D_RNIEP, Status::REALIZABLE, finds.diagonalizable};
    if (out.sniep.status == Status::UNKNOWN && finds.symmetric)
        out.sniep = {Problem::SNIEP, Status::REALIZABLE, finds.symmetric};

    // (e) top-two shift deduction
    if (out.niep.status == Status::UNKNOWN) {
        if (const auto cert = guo_deduction(sp))
            out.niep = {Problem::NIEP, Status::REALIZABLE, cert};
    }

    return out;
}

}  // namespace niep
