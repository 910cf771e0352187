#include "niep/threshold.hpp"

#include <algorithm>

namespace niep {

std::string to_decimal(const Rational& r, int digits) {
    if (digits < 0) throw DomainError("to_decimal: negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = r.num() * scale;
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), r.den().get_mpz_t());
    // round half away from zero
    mpz_class rem2 = abs(rem) * 2;
    if (rem2 >= r.den()) q += (sgn(num) < 0 ? -1 : 1);

    const bool neg = sgn(q) < 0;
    std::string s = mpz_class(abs(q)).get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

namespace {

// 256-bit float rendered with the requested significant digits.
std::string mpf_to_string(const mpf_class& v, int sig_digits) {
    mp_exp_t exp;
    std::string digits = v.get_str(exp, 10, sig_digits);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits = digits.substr(1);
    }
    if (digits.empty()) digits = "0";
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(-exp, '0') + digits;
    } else if (static_cast<size_t>(exp) >= digits.size()) {
        out = digits + std::string(exp - digits.size(), '0');
    } else {
        out = digits.substr(0, exp) + "." + digits.substr(exp);
    }
    return (neg ? "-" : "") + out;
}

struct RootCandidate {
    IsolatingInterval iv;
    int row, col;  // 0-based here
    const Poly* poly;
};

// Candidates sharing the same real root, merged for region bookkeeping.
struct Boundary {
    Rational lo, hi;
    std::vector<RootCandidate> members;
};

bool root_is_nonnegative(const Poly& p, const SturmChain& chain, const IsolatingInterval& iv) {
    if (iv.hi.sign() < 0) return false;
    if (iv.lo.sign() >= 0) return true;
    if (p(Rational(0)).is_zero()) return true;  // the single bracketed root is 0 itself
    if (iv.hi.is_zero()) return false;          // root <= hi = 0 and p(0) != 0
    return chain.count(iv.lo, Rational(0)) == 0;
}

}  // namespace

ThresholdResult family_nonneg_threshold(const MatrixFamily& f, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("family_nonneg_threshold: eps must be positive");
    const int n = f.dim();

    // 1. nonnegative roots of every entry polynomial
    std::vector<RootCandidate> cands;
    const Rational eps_work = std::min(eps, Rational(1, 16));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Poly& p = f.entry(i, j);
            if (p.is_zero()) continue;
            if (p.degree() == 0) {
                if (p.leading().sign() < 0)
                    throw DomainError("family_nonneg_threshold: entry (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ") is a negative constant");
                continue;
            }
            const SturmChain chain(p);
            for (auto iv : isolate_real_roots(p, eps_work)) {
                if (!root_is_nonnegative(p, chain, iv)) continue;
                // a strictly positive root must carry a strictly positive
                // lower bound, so the region left of the first boundary can
                // be sampled inside (0, root)
                while (iv.lo.sign() <= 0 && !p(Rational(0)).is_zero())
                    iv = chain.refine(iv, iv.width() / Rational(2));
                cands.push_back({iv, i, j, &p});
            }
        }
    }

    ThresholdResult result;
    result.family = f.name();

    auto fill_closed_form = [&](ThresholdResult& res) {
        if (!f.threshold_closed_form()) return;
        const auto& cf = *f.threshold_closed_form();
        const int prec_bits = 256;
        mpf_class inner(cf.d, prec_bits);
        inner = sqrt(inner);
        inner = inner * mpf_class(cf.mult, prec_bits) + mpf_class(cf.offset, prec_bits);
        mpf_class value = sqrt(inner) / mpf_class(cf.denom, prec_bits);
        const Rational mid = res.interval.midpoint();
        mpf_class mid_f(mid.raw(), prec_bits);
        mpf_class diff = value - mid_f;
        if (diff < 0) diff = -diff;

        ClosedFormCheck check;
        check.expression = cf.expression();
        check.closed_form_decimal = mpf_to_string(value, 30);
        check.interval_mid_decimal = to_decimal(mid, 30);
        check.abs_diff = diff.get_d();
        check.agrees = check.abs_diff <= 1e-9;
        res.closed_form = check;
    };

    if (cands.empty()) {
        // nonnegative everywhere on [0, oo): check t = 0 and t = 1 for sanity
        if (!f.admissible(Rational(0)) || !f.admissible(Rational(1)))
            throw DomainError("family_nonneg_threshold: no roots yet a negative entry exists");
        result.interval = IsolatingInterval{Rational(0), Rational(0), 1};
        fill_closed_form(result);
        return result;
    }

    // 2. resolve candidates into disjoint boundaries (shared roots merge)
    std::sort(cands.begin(), cands.end(), [](const RootCandidate& a, const RootCandidate& b) {
        if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
        return std::make_pair(a.row, a.col) < std::make_pair(b.row, b.col);
    });

    auto overlaps = [](const RootCandidate& a, const RootCandidate& b) {
        return !(a.iv.hi < b.iv.lo || b.iv.hi < a.iv.lo);
    };
    auto same_root = [](const RootCandidate& a, const RootCandidate& b) {
        const Poly g = poly_gcd(*a.poly, *b.poly);
        if (g.degree() < 1) return false;
        const Rational lo = std::min(a.iv.lo, b.iv.lo);
        const Rational hi = std::max(a.iv.hi, b.iv.hi);
        return SturmChain(g).count(lo, hi) >= 1;
    };

    for (int round = 0; round < 200; ++round) {
        bool conflict = false;
        for (size_t k = 0; k + 1 < cands.size() && !conflict; ++k) {
            if (overlaps(cands[k], cands[k + 1]) && !same_root(cands[k], cands[k + 1])) {
                const SturmChain ca(*cands[k].poly), cb(*cands[k + 1].poly);
                cands[k].iv = ca.refine(cands[k].iv, cands[k].iv.width() / Rational(4));
                cands[k + 1].iv = cb.refine(cands[k + 1].iv, cands[k + 1].iv.width() / Rational(4));
                conflict = true;
            }
        }
        if (!conflict) break;
        std::sort(cands.begin(), cands.end(),
                  [](const RootCandidate& a, const RootCandidate& b) { return a.iv.lo < b.iv.lo; });
        if (round == 199)
            throw DomainError("family_nonneg_threshold: could not separate entry roots");
    }

    std::vector<Boundary> bounds;
    for (const auto& c : cands) {
        if (!bounds.empty() && !(bounds.back().hi < c.iv.lo)) {
            bounds.back().lo = std::min(bounds.back().lo, c.iv.lo);
            bounds.back().hi = std::max(bounds.back().hi, c.iv.hi);
            bounds.back().members.push_back(c);
        } else {
            bounds.push_back(Boundary{c.iv.lo, c.iv.hi, {c}});
        }
    }

    // 3. sample the sign of all entries in each root-free region;
    //    region r lies left of boundary r, the last region is unbounded
    const int m = static_cast<int>(bounds.size());
    auto feasible_at = [&](const Rational& t) { return f.admissible(t); };

    std::vector<int> feasible(m + 1, -1);  // -1 unknown, 0 no, 1 yes, -2 empty region
    {
        // region 0: [0, bounds[0])
        if (bounds[0].lo.sign() > 0)
            feasible[0] = feasible_at(bounds[0].lo / Rational(2)) ? 1 : 0;
        else
            feasible[0] = -2;  // boundary root sits at (or brackets) 0
        for (int r = 1; r < m; ++r) {
            const Rational s = (bounds[r - 1].hi + bounds[r].lo) / Rational(2);
            feasible[r] = feasible_at(s) ? 1 : 0;
        }
        feasible[m] = feasible_at(bounds[m - 1].hi + Rational(1)) ? 1 : 0;
    }

    if (feasible[m] != 1)
        throw DomainError(
            "family_nonneg_threshold: entries are not eventually nonnegative as t grows");

    int first_good = m;
    while (first_good > 0 && feasible[first_good - 1] == 1) --first_good;

    if (first_good == 0) {
        result.interval = IsolatingInterval{Rational(0), Rational(0), 1};
        fill_closed_form(result);
        return result;
    }

    // 4. binding entry: a member of the boundary that is negative just left
    //    of its root (lexicographic tie-break by entry position)
    Boundary& edge = bounds[first_good - 1];
    std::sort(edge.members.begin(), edge.members.end(),
              [](const RootCandidate& a, const RootCandidate& b) {
                  return std::make_pair(a.row, a.col) < std::make_pair(b.row, b.col);
              });
    const RootCandidate* binding = nullptr;
    for (const auto& member : edge.members) {
        if ((*member.poly)(edge.lo).sign() < 0) {
            binding = &member;
            break;
        }
    }
    if (binding == nullptr) binding = &edge.members.front();

    const SturmChain chain(*binding->poly);
    result.interval = chain.refine(binding->iv, eps);
    result.has_binding_entry = true;
    result.row = binding->row + 1;
    result.col = binding->col + 1;
    result.binding_poly = binding->poly->primitive_part();
    fill_closed_form(result);
    return result;
}

}  // namespace niep
