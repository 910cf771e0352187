#pragma once

#include <optional>
#include <string>

#include "niep/families.hpp"
#include "niep/roots.hpp"

namespace niep {

/// High-precision comparison of an isolated threshold against the
/// family's nested-radical closed form.
struct ClosedFormCheck {
    std::string expression;
    std::string closed_form_decimal;   // >= 30 significant digits
    std::string interval_mid_decimal;
    double abs_diff = 0.0;             // |closed form - interval midpoint|
    bool agrees = false;               // abs_diff <= 1e-9
};

/// Boundary of the unbounded all-nonnegative parameter region of a family.
struct ThresholdResult {
    std::string family;
    IsolatingInterval interval;
    /// Entry whose root is binding; absent when the threshold is 0 with no
    /// binding root (interval degenerates to [0,0]).
    bool has_binding_entry = false;
    int row = 0;  // 1-based
    int col = 0;
    Poly binding_poly;  // primitive image of the binding entry polynomial
    std::optional<ClosedFormCheck> closed_form;
};

/// Isolates inf{ t >= 0 : all entries of f(t) >= 0 on [t, oo) } to width
/// <= eps: collects the nonnegative roots of every entry polynomial by
/// Sturm isolation, samples the sign of all entries between consecutive
/// roots, and returns the left endpoint of the final all-nonnegative
/// region. Throws DomainError when no unbounded nonnegative region exists.
ThresholdResult family_nonneg_threshold(const MatrixFamily& f, const Rational& eps);

/// Decimal rendering of an exact rational, digits after the point,
/// round-half-away-from-zero.
std::string to_decimal(const Rational& r, int digits);

}  // namespace niep
