#pragma once

#include <optional>
#include <vector>

#include "niep/poly.hpp"

namespace niep {

/// Rational interval certified to contain exactly one real root of the
/// bracketed polynomial in (lo, hi].
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int root_count = 1;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Sturm chain of the squarefree part of a polynomial. Sign variations are
/// counted ignoring zero values, which equals the right-limit variation
/// count, so root counts over (lo, hi] are exact even when an endpoint is
/// itself a root.
class SturmChain {
  public:
    explicit SturmChain(const Poly& p);

    /// Number of distinct real roots in (lo, hi]; requires lo < hi.
    int count(const Rational& lo, const Rational& hi) const;

    /// Strict upper bound on the absolute value of every root.
    Rational root_bound() const;

    /// Shrinks an interval known to hold exactly one root down to the
    /// requested width, preserving the (lo, hi] bracketing.
    IsolatingInterval refine(IsolatingInterval iv, const Rational& eps) const;

    const Poly& squarefree() const { return sqfree_; }

  private:
    int variations(const Rational& x) const;

    Poly sqfree_;
    std::vector<Poly> chain_;
};

/// Exact count of distinct real roots of p in (lo, hi].
/// Throws DomainError for the zero polynomial or lo >= hi.
int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Isolating interval of width <= eps around the smallest real root >= 0,
/// or nullopt when p has no nonnegative real root.
std::optional<IsolatingInterval> isolate_smallest_nonneg_root(const Poly& p, const Rational& eps);

/// All real roots as disjoint isolating intervals of width <= eps,
/// ordered increasing.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& p, const Rational& eps);

}  // namespace niep
