#pragma once

#include <vector>

#include "niep/matrix.hpp"

namespace niep {

using NumericMatrix = std::vector<std::vector<double>>;
using NumericVector = std::vector<double>;

NumericMatrix to_numeric(const MatrixQ& A);
NumericMatrix to_numeric(const MatrixQuad& A);

struct EigenPair {
    double value;
    NumericVector vector;  // unit norm, first nonzero component positive
};

/// Cyclic Jacobi rotations until the off-diagonal norm drops below tol;
/// eigenpairs sorted by eigenvalue descending. Throws DomainError when the
/// input is asymmetric beyond tol.
std::vector<EigenPair> symmetric_eigen(const NumericMatrix& A, double tol = 1e-12);

/// Entry sign census of a numeric vector: |x| <= tol counts as zero.
struct SignPattern {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    double tolerance = 0.0;
};

SignPattern sign_pattern(const NumericVector& v, double tol = 1e-9);

/// Perron vector by power iteration on A + cI with c = 1 + max diagonal
/// entry, all-ones start, convergence at 1e-12. A must be nonnegative.
NumericVector perron_vector(const NumericMatrix& A);

}  // namespace niep
