#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "niep/conditions.hpp"
#include "niep/matrix.hpp"
#include "niep/poly.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Eigenvalue of a one-parameter family: constant + slope * t.
struct AffineValue {
    Rational constant;
    Rational slope;

    Rational at(const Rational& t) const { return constant + slope * t; }
};

/// Nested-radical reference value sqrt(mult * sqrt(d) + offset) / denom for
/// cross-checking an isolated threshold against its closed form.
struct ClosedFormSqrt {
    long mult = 0;
    long d = 0;
    long offset = 0;
    long denom = 1;

    std::string expression() const;
};

/// One-parameter matrix family with polynomial entries in t and an
/// affine-in-t target spectrum.
class MatrixFamily {
  public:
    MatrixFamily(std::string name, int n, std::vector<Poly> entries,
                 std::vector<AffineValue> target,
                 std::optional<ClosedFormSqrt> threshold_closed_form = std::nullopt);

    const std::string& name() const { return name_; }
    int dim() const { return n_; }
    const Poly& entry(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<Poly>& entries() const { return entries_; }
    const std::vector<AffineValue>& target() const { return target_; }
    const std::optional<ClosedFormSqrt>& threshold_closed_form() const { return closed_form_; }

    MatrixQ eval(const Rational& t) const;
    Spectrum target_at(const Rational& t) const;
    /// Expanded monic product over the target values at t.
    Poly target_poly(const Rational& t) const;
    /// Exact test: every entry nonnegative at t.
    bool admissible(const Rational& t) const;

  private:
    std::string name_;
    int n_;
    std::vector<Poly> entries_;  // row-major n*n
    std::vector<AffineValue> target_;
    std::optional<ClosedFormSqrt> closed_form_;
};

/// Spectrum (3+t, 3-t, -2, -2, -2): companion-like 5x5 family, nonnegative
/// from the threshold sqrt(16*sqrt(6) - 39) upward.
const MatrixFamily& family_lm_sigma_hat();

/// Spectrum (3+t, 3-t, -19/10, -2, -21/10): the perturbed 5x5 family,
/// nonnegative from sqrt(120*sqrt(1066) - 3899)/10 upward, diagonalizable.
const MatrixFamily& family_perturbed();

const std::vector<const MatrixFamily*>& all_families();
const MatrixFamily* find_family(const std::string& name);

/// Fixed catalog matrix with verified claims.
struct CatalogEntry {
    std::string name;
    std::variant<MatrixQ, MatrixQuad> matrix;
    Spectrum claimed_spectrum;
    bool symmetric = false;
    bool irreducible = false;
    bool diagonalizable = false;
    /// Jordan block of size >= 2 at eigenvalue -2.
    bool defective_at_minus_two = false;

    bool rational_field() const { return std::holds_alternative<MatrixQ>(matrix); }
};

/// The three catalog matrices (SYM_SIGMA_T1, SYM_SIGMA_HAT_T1,
/// JORDAN_SIGMA_3_4), each re-verified on first load; a transcription
/// error raises ConstructionError.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);

/// Companion matrix of the monic polynomial with the given spectrum;
/// requires a satisfied Suleimanova condition and post-verifies
/// nonnegativity and the characteristic polynomial.
MatrixQ suleimanova_companion(const Spectrum& sp);

/// Machine-checkable justification of a REALIZABLE / NOT_REALIZABLE call.
struct Certificate {
    enum class Kind { Matrix, Deduction, Violation, PartitionScan };

    Kind kind = Kind::Matrix;
    /// Catalog/family/construction name, or deduction rule name.
    std::string source;
    /// Family parameter, when the certificate is a family instance.
    std::optional<Rational> parameter;
    std::variant<std::monostate, MatrixQ, MatrixQuad> matrix;
    std::optional<ConditionReport> violation;
    /// Premises of a deduction, or scan summary.
    std::string detail;
};

/// Spectrum together with a realizability certificate.
struct CertifiedSpectrum {
    Spectrum spectrum;
    Certificate certificate;
};

/// Shifts the top two values of a certified spectrum up by u >= 0
/// (realizability is preserved); returns the shifted spectrum with a
/// deduction certificate naming the premise.
CertifiedSpectrum guo_extend(const CertifiedSpectrum& base, const Rational& u);

}  // namespace niep
