#pragma once

#include <string>
#include <utility>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Certificate check of one (matrix, spectrum) pair. charpoly_match is
/// decided by exact polynomial equality, never numerically.
struct VerificationReport {
    bool charpoly_match = false;
    bool nonnegative = false;
    bool irreducible = false;
    bool symmetric = false;
    bool diagonalizable = false;
    /// Exact mismatch data when a flag is false (named text fields).
    std::vector<std::pair<std::string, std::string>> details;

    /// The pass/fail verdict: descriptive flags (irreducible, symmetric,
    /// diagonalizable) do not fail a certificate.
    bool ok() const { return charpoly_match && nonnegative; }
};

/// Jordan block sizes of one rational eigenvalue, from the exact rank
/// sequence rank((A - lambda*I)^k).
struct JordanReport {
    Rational eigenvalue;
    int algebraic_multiplicity = 0;
    std::vector<int> block_sizes;  // descending
};

VerificationReport verify_spectrum(const MatrixQ& A, const Spectrum& sp);
VerificationReport verify_spectrum(const MatrixQuad& A, const Spectrum& sp);

/// Strong connectivity of the nonzero-pattern digraph. The matrix must be
/// entrywise nonnegative.
bool is_irreducible(const MatrixQ& A);
bool is_irreducible(const MatrixQuad& A);

/// Squarefreeness of the minimal polynomial.
bool is_diagonalizable(const MatrixQ& A);
bool is_diagonalizable(const MatrixQuad& A);

JordanReport jordan_structure(const MatrixQ& A, const Rational& lam);
JordanReport jordan_structure(const MatrixQuad& A, const Rational& lam);

/// Whether A^3 + (18-2t^2) I = 4 A^2 + (3+t^2) A holds exactly, i.e.
/// (x-(3+t))(x-(3-t))(x+2) annihilates A.
bool check_cubic_annihilator(const MatrixQ& A, const Rational& t);

/// Rank-based Schur identity: when rank(B) equals the rank k of the
/// invertible leading block B11, B22 = B21 * B11^{-1} * B12 must hold (a
/// failure in that case raises, it would be an arithmetic bug). When
/// rank(B) != k the returned value carries no claim.
bool schur_rank_identity(const MatrixQ& B, int k);

}  // namespace niep
