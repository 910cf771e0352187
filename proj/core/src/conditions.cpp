#include "niep/conditions.hpp"

#include <algorithm>

#include "niep/errors.hpp"

namespace niep {

ConditionReport check_perron(const Spectrum& sp) {
    ConditionReport rep;
    rep.condition = "perron";
    rep.applicable = true;
    const Rational& top = sp[0];
    Rational max_mod = abs(top);
    for (const auto& v : sp.values()) max_mod = std::max(max_mod, abs(v));
    rep.satisfied = (top == max_mod);
    rep.witness = {{"lambda_1", top}, {"max_modulus", max_mod}};
    rep.note = rep.satisfied ? "spectral radius is attained by the largest entry"
                             : "largest entry is smaller than the spectral radius";
    return rep;
}

ConditionReport check_power_sums(const Spectrum& sp, int k_max) {
    if (k_max < 1) throw DomainError("check_power_sums: k_max must be >= 1");
    ConditionReport rep;
    rep.condition = "power_sums";
    rep.applicable = true;
    rep.satisfied = true;
    const PowerSums ps = compute_power_sums(sp, k_max);
    for (int k = 1; k <= k_max; ++k) {
        if (ps.at(k).sign() < 0) {
            rep.satisfied = false;
            rep.witness = {{"k", Rational(k)}, {"s_k", ps.at(k)}};
            rep.note = "s_" + std::to_string(k) + " = " + ps.at(k).str() + " < 0";
            return rep;
        }
    }
    rep.note = "s_k >= 0 for k = 1.." + std::to_string(k_max);
    return rep;
}

ConditionReport check_jll(const Spectrum& sp, int k_max, int m_max) {
    if (k_max < 1 || m_max < 1) throw DomainError("check_jll: depths must be >= 1");
    ConditionReport rep;
    rep.condition = "jll";
    rep.applicable = true;
    rep.satisfied = true;
    const Rational n(sp.n());
    const PowerSums ps = compute_power_sums(sp, k_max * m_max);
    for (int k = 1; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            const Rational lhs = pow(n, static_cast<unsigned>(m - 1)) * ps.at(k * m);
            const Rational rhs = pow(ps.at(k), static_cast<unsigned>(m));
            if (lhs < rhs) {
                rep.satisfied = false;
                rep.witness = {{"k", Rational(k)}, {"m", Rational(m)}, {"lhs", lhs}, {"rhs", rhs}};
                rep.note = "n^(m-1)*s_km < s_k^m at (k,m) = (" + std::to_string(k) + "," +
                           std::to_string(m) + ")";
                return rep;
            }
        }
    }
    rep.note = "n^(m-1)*s_km >= s_k^m for k <= " + std::to_string(k_max) + ", m <= " +
               std::to_string(m_max);
    return rep;
}

ConditionReport check_lm_trace_zero(const Spectrum& sp) {
    ConditionReport rep;
    rep.condition = "lm_trace_zero";
    rep.applicable = (sp.n() == 5 && power_sum(sp, 1).is_zero());
    if (!rep.applicable) {
        rep.note = "applies only to five values summing to zero";
        return rep;
    }
    const Rational four_s4 = Rational(4) * power_sum(sp, 4);
    const Rational s2 = power_sum(sp, 2);
    const Rational s2_sq = s2 * s2;
    rep.satisfied = (four_s4 >= s2_sq);
    rep.witness = {{"four_s4", four_s4}, {"s2_squared", s2_sq}};
    rep.note = "4*s_4 " + std::string(rep.satisfied ? ">=" : "<") + " s_2^2  (" + four_s4.str() +
               " vs " + s2_sq.str() + ")";
    return rep;
}

ConditionReport check_extreme(const Spectrum& sp) {
    ConditionReport rep;
    rep.condition = "extreme";
    rep.applicable = (sp.n() == 5);
    if (!rep.applicable) {
        rep.note = "applies only to lists of five values";
        return rep;
    }
    const Rational s1 = power_sum(sp, 1);
    const Rational s2 = power_sum(sp, 2);
    const Rational s4 = power_sum(sp, 4);
    const Rational lhs =
        Rational(4) * s4 - s2 * s2 + s1 * s1 * s2 - pow(s1, 4) / Rational(2);
    rep.satisfied = (lhs.sign() >= 0);
    rep.witness = {{"lhs", lhs}};
    rep.note = "4*s_4 - s_2^2 + s_1^2*s_2 - s_1^4/2 = " + lhs.str();
    return rep;
}

ConditionReport check_mn_symmetric(const Spectrum& sp) {
    ConditionReport rep;
    rep.condition = "mn_symmetric";
    rep.applicable = (sp.n() == 5);
    if (!rep.applicable) {
        rep.note = "applies only to lists of five values";
        return rep;
    }
    const Rational lhs = sp[1] + sp[4];
    const Rational trace = power_sum(sp, 1);
    rep.satisfied = (lhs <= trace);
    rep.witness = {{"lambda2_plus_lambda5", lhs}, {"trace", trace}};
    rep.note = "lambda_2 + lambda_5 " + std::string(rep.satisfied ? "<=" : ">") + " trace (" +
               lhs.str() + " vs " + trace.str() + "); necessary for symmetric realizations only";
    return rep;
}

ConditionReport check_suleimanova(const Spectrum& sp) {
    ConditionReport rep;
    rep.condition = "suleimanova";
    rep.applicable = sp[0].sign() > 0 && (sp.n() == 1 || sp[1].sign() <= 0);
    if (!rep.applicable) {
        rep.note = "applies only to lists with exactly one positive value";
        return rep;
    }
    const Rational s1 = power_sum(sp, 1);
    rep.satisfied = (s1.sign() >= 0);
    rep.witness = {{"sum", s1}};
    rep.note = rep.satisfied ? "single positive value and nonnegative sum: realizable"
                             : "sum " + s1.str() + " is negative";
    return rep;
}

namespace {

bool part_viable(const std::vector<Rational>& values) {
    const Spectrum part(values);
    if (!check_perron(part).satisfied) return false;
    if (!check_power_sums(part, 6).satisfied) return false;
    return check_jll(part, 6, 6).satisfied;
}

}  // namespace

std::vector<Bipartition> reducible_partition_scan(const Spectrum& sp) {
    const int n = sp.n();
    if (n < 2) throw DomainError("reducible_partition_scan: needs at least two values");
    std::vector<Bipartition> viable;
    // element 0 stays in part1, so each unordered bipartition appears once
    const unsigned long limit = 1ul << (n - 1);
    for (unsigned long mask = 1; mask < limit; ++mask) {
        Bipartition bp;
        bp.part1.push_back(sp[0]);
        for (int i = 1; i < n; ++i) {
            if (mask & (1ul << (i - 1)))
                bp.part2.push_back(sp[i]);
            else
                bp.part1.push_back(sp[i]);
        }
        if (part_viable(bp.part1) && part_viable(bp.part2)) viable.push_back(std::move(bp));
    }
    // repeated values make distinct index splits collapse to the same
    // multiset bipartition: canonicalize and deduplicate
    auto less = [](const Bipartition& a, const Bipartition& b) {
        if (a.part1.size() != b.part1.size()) return a.part1.size() < b.part1.size();
        if (a.part1 != b.part1)
            return std::lexicographical_compare(a.part1.begin(), a.part1.end(), b.part1.begin(),
                                                b.part1.end());
        return std::lexicographical_compare(a.part2.begin(), a.part2.end(), b.part2.begin(),
                                            b.part2.end());
    };
    auto equal = [](const Bipartition& a, const Bipartition& b) {
        return a.part1 == b.part1 && a.part2 == b.part2;
    };
    std::sort(viable.begin(), viable.end(), less);
    viable.erase(std::unique(viable.begin(), viable.end(), equal), viable.end());
    return viable;
}

ExtremeAuditRecord sigma_t_extreme_audit() {
    // spectrum (3+t, 3, -2, -2, -2) with symbolic t
    const std::vector<Poly> values = {
        Poly{Rational(3), Rational(1)}, Poly{Rational(3)}, Poly{Rational(-2)},
        Poly{Rational(-2)}, Poly{Rational(-2)}};
    auto psum = [&](int k) {
        Poly s;
        for (const auto& v : values) {
            Poly p = Poly::constant(Rational(1));
            for (int i = 0; i < k; ++i) p *= v;
            s += p;
        }
        return s;
    };
    const Poly s1 = psum(1), s2 = psum(2), s4 = psum(4);
    const Poly lhs = Rational(4) * s4 - s2 * s2 + s1 * s1 * s2 -
                     Rational(1, 2) * (s1 * s1 * s1 * s1);

    ExtremeAuditRecord rec;
    rec.quartic = lhs;
    const Rational eps(1, 1000000000000L);
    auto iv = isolate_smallest_nonneg_root(lhs, eps);
    if (!iv) throw ConstructionError("extreme audit: quartic has no nonnegative root");
    rec.root = *iv;
    rec.reference = Rational(39671, 100000);
    const Rational mid = rec.root.midpoint();
    rec.abs_diff = abs(mid - rec.reference);
    rec.discrepancy = rec.abs_diff > Rational(1, 1000);
    return rec;
}

}  // namespace niep
