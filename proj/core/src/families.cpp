#include "niep/families.hpp"

#include <algorithm>

#include "niep/verify.hpp"

namespace niep {

std::string ClosedFormSqrt::expression() const {
    std::string s = "sqrt(" + std::to_string(mult) + "*sqrt(" + std::to_string(d) + ")" +
                    (offset < 0 ? " - " + std::to_string(-offset) : " + " + std::to_string(offset)) +
                    ")";
    if (denom != 1) s += "/" + std::to_string(denom);
    return s;
}

MatrixFamily::MatrixFamily(std::string name, int n, std::vector<Poly> entries,
                           std::vector<AffineValue> target,
                           std::optional<ClosedFormSqrt> threshold_closed_form)
    : name_(std::move(name)),
      n_(n),
      entries_(std::move(entries)),
      target_(std::move(target)),
      closed_form_(std::move(threshold_closed_form)) {
    if (n_ < 1 || entries_.size() != static_cast<size_t>(n_) * n_ ||
        target_.size() != static_cast<size_t>(n_))
        throw DomainError("MatrixFamily: inconsistent sizes");
}

MatrixQ MatrixFamily::eval(const Rational& t) const {
    MatrixQ m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j)(t);
    return m;
}

Spectrum MatrixFamily::target_at(const Rational& t) const {
    std::vector<Rational> vals;
    vals.reserve(target_.size());
    for (const auto& v : target_) vals.push_back(v.at(t));
    return Spectrum(std::move(vals));
}

Poly MatrixFamily::target_poly(const Rational& t) const {
    std::vector<Rational> vals;
    vals.reserve(target_.size());
    for (const auto& v : target_) vals.push_back(v.at(t));
    return poly_from_roots(vals);
}

bool MatrixFamily::admissible(const Rational& t) const {
    for (const auto& p : entries_)
        if (p(t).sign() < 0) return false;
    return true;
}

namespace {

Poly P(std::initializer_list<Rational> coeffs) { return Poly(coeffs); }
Rational R(long n, long d = 1) { return Rational(n, d); }

MatrixFamily build_lm_sigma_hat() {
    const Poly zero;
    const Poly one = P({R(1)});
    // (15 + t^2)/2
    const Poly half_15_t2 = P({R(15, 2), R(0), R(1, 2)});
    std::vector<Poly> e = {
        zero, one, zero, zero, zero,
        half_15_t2, zero, one, zero, zero,
        zero, zero, zero, one, zero,
        zero, zero, zero, zero, one,
        // 3t^4 + 58t^2 + 3, (t^4 + 78t^2 - 15)/4, 10 + 6t^2, (15 + t^2)/2, 0
        P({R(3), R(0), R(58), R(0), R(3)}),
        P({R(-15, 4), R(0), R(78, 4), R(0), R(1, 4)}),
        P({R(10), R(0), R(6)}),
        half_15_t2,
        zero};
    std::vector<AffineValue> target = {
        {R(3), R(1)}, {R(3), R(-1)}, {R(-2), R(0)}, {R(-2), R(0)}, {R(-2), R(0)}};
    return MatrixFamily("lm_sigma_hat", 5, std::move(e), std::move(target),
                        ClosedFormSqrt{16, 6, -39, 1});
}

MatrixFamily build_perturbed() {
    const Poly zero;
    const Poly one = P({R(1)});
    // (1501 + 100 t^2)/200
    const Poly c21 = P({R(1501, 200), R(0), R(1, 2)});
    std::vector<Poly> e = {
        zero, one, zero, zero, zero,
        c21, zero, one, zero, zero,
        zero, zero, zero, one, zero,
        zero, zero, zero, zero, one,
        // (15000t^4 + 289950t^2 + 14649)/5000, (10000t^4 + 779800t^2 - 148199)/40000,
        // (150t^2 + 249)/25, (1501 + 100t^2)/200, 0
        P({R(14649, 5000), R(0), R(289950, 5000), R(0), R(3)}),
        P({R(-148199, 40000), R(0), R(779800, 40000), R(0), R(1, 4)}),
        P({R(249, 25), R(0), R(6)}),
        c21,
        zero};
    std::vector<AffineValue> target = {
        {R(3), R(1)}, {R(3), R(-1)}, {R(-19, 10), R(0)}, {R(-2), R(0)}, {R(-21, 10), R(0)}};
    return MatrixFamily("perturbed", 5, std::move(e), std::move(target),
                        ClosedFormSqrt{120, 1066, -3899, 10});
}

}  // namespace

const MatrixFamily& family_lm_sigma_hat() {
    static const MatrixFamily f = build_lm_sigma_hat();
    return f;
}

const MatrixFamily& family_perturbed() {
    static const MatrixFamily f = build_perturbed();
    return f;
}

const std::vector<const MatrixFamily*>& all_families() {
    static const std::vector<const MatrixFamily*> fs = {&family_lm_sigma_hat(),
                                                        &family_perturbed()};
    return fs;
}

const MatrixFamily* find_family(const std::string& name) {
    for (const auto* f : all_families())
        if (f->name() == name) return f;
    return nullptr;
}

namespace {

void verify_catalog_entry(const CatalogEntry& e) {
    const auto check = [&](const auto& m) {
        const VerificationReport rep = verify_spectrum(m, e.claimed_spectrum);
        if (!rep.charpoly_match)
            throw ConstructionError("catalog " + e.name + ": charpoly mismatch");
        if (!rep.nonnegative)
            throw ConstructionError("catalog " + e.name + ": negative entry");
        if (rep.symmetric != e.symmetric)
            throw ConstructionError("catalog " + e.name + ": symmetry flag wrong");
        if (rep.irreducible != e.irreducible)
            throw ConstructionError("catalog " + e.name + ": irreducibility flag wrong");
        if (rep.diagonalizable != e.diagonalizable)
            throw ConstructionError("catalog " + e.name + ": diagonalizability flag wrong");
        const JordanReport jr = jordan_structure(m, Rational(-2));
        const bool defective = !jr.block_sizes.empty() && jr.block_sizes.front() >= 2;
        if (defective != e.defective_at_minus_two)
            throw ConstructionError("catalog " + e.name + ": Jordan flag at -2 wrong");
    };
    std::visit(check, e.matrix);
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    {
        // two symmetric blocks: all-off-diagonal 2s (3x3) and [[1, sqrt6], [sqrt6, 0]]
        const QuadExt z, two(Rational(2)), one(Rational(1));
        const QuadExt rt6(Rational(0), Rational(1), 6);
        MatrixQuad m{{z, two, two, z, z},
                     {two, z, two, z, z},
                     {two, two, z, z, z},
                     {z, z, z, one, rt6},
                     {z, z, z, rt6, z}};
        entries.push_back(CatalogEntry{
            "sym_sigma_t1", std::move(m),
            Spectrum({R(4), R(3), R(-2), R(-2), R(-2)}),
            /*symmetric=*/true, /*irreducible=*/false, /*diagonalizable=*/true,
            /*defective_at_minus_two=*/false});
    }
    {
        MatrixQ m{{R(0), R(2), R(0), R(0), R(0)},
                  {R(2), R(0), R(0), R(0), R(0)},
                  {R(0), R(0), R(0), R(2), R(2)},
                  {R(0), R(0), R(2), R(0), R(2)},
                  {R(0), R(0), R(2), R(2), R(0)}};
        entries.push_back(CatalogEntry{
            "sym_sigma_hat_t1", std::move(m),
            Spectrum({R(4), R(2), R(-2), R(-2), R(-2)}),
            true, false, true, false});
    }
    {
        // one quarter of an integer matrix; Jordan block of size 2 at -2
        MatrixQ m{{R(0), R(2), R(1, 4), R(0), R(0)},
                  {R(2), R(0), R(1, 4), R(0), R(0)},
                  {R(75, 8), R(75, 8), R(0), R(1, 4), R(0)},
                  {R(0), R(0), R(0), R(0), R(1, 4)},
                  {R(829, 4), R(829, 4), R(64), R(55, 2), R(0)}};
        entries.push_back(CatalogEntry{
            "jordan_sigma_3_4", std::move(m),
            Spectrum({R(15, 4), R(9, 4), R(-2), R(-2), R(-2)}),
            false, true, false, true});
    }

    for (const auto& e : entries) verify_catalog_entry(e);
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

MatrixQ suleimanova_companion(const Spectrum& sp) {
    const ConditionReport cond = check_suleimanova(sp);
    if (!cond.applicable)
        throw DomainError("suleimanova_companion: list has more than one positive value");
    if (!cond.satisfied)
        throw DomainError("suleimanova_companion: sum of the list is negative");

    const Poly p = poly_from_roots(sp.values());
    const int n = sp.n();
    MatrixQ m(n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = Rational(1);
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -p.coeff(i);

    if (!m.is_nonnegative()) {
        std::string coeffs;
        for (const auto& c : p.coeffs()) coeffs += (coeffs.empty() ? "" : ", ") + c.str();
        throw ConstructionError(
            "suleimanova_companion: companion matrix has a negative entry; coefficients [" +
            coeffs + "]");
    }
    if (charpoly(m) != p)
        throw ConstructionError("suleimanova_companion: charpoly self-check failed");
    return m;
}

CertifiedSpectrum guo_extend(const CertifiedSpectrum& base, const Rational& u) {
    if (base.certificate.kind != Certificate::Kind::Matrix &&
        base.certificate.kind != Certificate::Kind::Deduction)
        throw DomainError("guo_extend: base spectrum carries no realizability certificate");
    if (u.sign() < 0) throw DomainError("guo_extend: shift must be nonnegative");
    if (base.spectrum.n() < 2) throw DomainError("guo_extend: needs at least two values");

    std::vector<Rational> vals = base.spectrum.values();
    vals[0] += u;
    vals[1] += u;

    Certificate cert;
    cert.kind = Certificate::Kind::Deduction;
    cert.source = "guo_shift";
    cert.parameter = u;
    cert.detail = "realizable base " + base.spectrum.str() + " (certificate: " +
                  base.certificate.source + "), top two values shifted by u = " + u.str();
    return CertifiedSpectrum{Spectrum(std::move(vals)), std::move(cert)};
}

}  // namespace niep
