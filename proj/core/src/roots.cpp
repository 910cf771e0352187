#include "niep/roots.hpp"

#include <algorithm>

namespace niep {

namespace {

// Primitive image scaled by a positive constant only; Sturm chains may be
// rescaled positively but never sign-flipped.
Poly pos_primitive(const Poly& q) {
    Poly pp = q.primitive_part();
    return q.leading().sign() < 0 ? -pp : pp;
}

}  // namespace

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw DomainError("SturmChain: zero polynomial");
    sqfree_ = squarefree_part(p);
    chain_.push_back(pos_primitive(sqfree_));
    if (sqfree_.degree() >= 1) {
        chain_.push_back(pos_primitive(sqfree_.derivative()));
        while (chain_.back().degree() >= 1) {
            const Poly& a = chain_[chain_.size() - 2];
            const Poly& b = chain_.back();
            Poly r = a.divmod(b).second;
            if (r.is_zero()) break;  // squarefree p0 ends in a nonzero constant
            chain_.push_back(pos_primitive(-r));
        }
    }
}

int SturmChain::variations(const Rational& x) const {
    int var = 0;
    int prev = 0;
    for (const auto& q : chain_) {
        const int s = q(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw DomainError("SturmChain: empty interval");
    return variations(lo) - variations(hi);
}

Rational SturmChain::root_bound() const {
    const auto& c = chain_.front().coeffs();
    if (c.size() <= 1) return Rational(1);
    const Rational lead = abs(c.back());
    Rational m(0);
    for (size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, abs(c[i]));
    return Rational(1) + m / lead;
}

IsolatingInterval SturmChain::refine(IsolatingInterval iv, const Rational& eps) const {
    while (iv.width() > eps) {
        const Rational mid = iv.midpoint();
        if (count(iv.lo, mid) >= 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    iv.root_count = 1;
    return iv;
}

int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi) {
    return SturmChain(p).count(lo, hi);
}

std::optional<IsolatingInterval> isolate_smallest_nonneg_root(const Poly& p, const Rational& eps) {
    if (p.is_zero()) throw DomainError("isolate_smallest_nonneg_root: zero polynomial");
    if (eps.sign() <= 0) throw DomainError("isolate_smallest_nonneg_root: eps must be positive");
    if (p.degree() == 0) return std::nullopt;

    const SturmChain chain(p);

    if (p(Rational(0)).is_zero()) {
        // root at 0 itself: shrink (lo, 0] until it brackets only that root
        Rational lo = -std::min(eps, Rational(1, 2));
        while (chain.count(lo, Rational(0)) != 1) lo = lo / Rational(2);
        return IsolatingInterval{lo, Rational(0), 1};
    }

    const Rational bound = chain.root_bound();
    if (chain.count(Rational(0), bound) == 0) return std::nullopt;

    IsolatingInterval iv{Rational(0), bound, 1};
    // bisect toward the smallest root, then shrink to width
    while (iv.width() > eps || chain.count(iv.lo, iv.hi) != 1) {
        const Rational mid = iv.midpoint();
        if (chain.count(iv.lo, mid) >= 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& p, const Rational& eps) {
    if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
    if (eps.sign() <= 0) throw DomainError("isolate_real_roots: eps must be positive");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0) return out;

    const SturmChain chain(p);
    const Rational bound = chain.root_bound();

    std::vector<IsolatingInterval> work{{-bound, bound, 0}};
    while (!work.empty()) {
        IsolatingInterval iv = work.back();
        work.pop_back();
        const int n = chain.count(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1 && iv.width() <= eps) {
            iv.root_count = 1;
            out.push_back(iv);
            continue;
        }
        const Rational mid = iv.midpoint();
        work.push_back({mid, iv.hi, 0});
        work.push_back({iv.lo, mid, 0});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace niep
