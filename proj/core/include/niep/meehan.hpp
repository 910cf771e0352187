#pragma once

#include <array>

#include "niep/numeric.hpp"

namespace niep {

/// Converged parameters of the structured 5x5 form
///   [ t 1 0 0 0 ; p 0 1 0 0 ; 0 q 0 1 0 ; 0 0 0 0 1 ; 0 0 w h 0 ]
/// matched against the target spectrum (3+t, 3, -2, -2, -2).
struct FitResult {
    double p = 0, q = 0, w = 0, h = 0;
    /// max |coefficient mismatch|, recomputed from the returned parameters.
    double residual = 0;
    /// min(p, q, w, h) >= -1e-10
    bool nonnegative = false;
    int seed_index = -1;   // which multistart seed converged
    int iterations = 0;
};

/// The structured matrix at the given parameters.
NumericMatrix meehan_matrix(double t, double p, double q, double w, double h);

/// Coefficient mismatch (degrees 0..3) between charpoly of the structured
/// form and the expanded target; the x^4 coefficient matches by trace.
std::array<double, 4> meehan_residual_vector(double t, double p, double q, double w, double h);

/// Damped Newton with a deterministic multistart grid
/// p,q,w,h in {0.5, 2, 5, 10}^4, step halving, at most 200 iterations per
/// start, convergence at residual < 1e-12; at most `attempts` seeds are
/// tried, the best converged solution by residual wins (ties by seed
/// order). Throws DomainError for t <= 0 and ConvergenceError (carrying
/// the best residual seen) when no start converges.
FitResult meehan_fit(double t, int attempts = 256);

}  // namespace niep
