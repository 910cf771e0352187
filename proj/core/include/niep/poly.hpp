#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "niep/quadext.hpp"
#include "niep/rational.hpp"

namespace niep {

/// Dense univariate polynomial with rational coefficients,
/// stored lowest degree first; the zero polynomial has no coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(Rational v);
    /// x^k with coefficient v.
    static Poly monomial(Rational v, int k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    Rational operator()(const Rational& x) const;
    QuadExt operator()(const QuadExt& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Rational& s, Poly p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Poly monic() const;

    /// Quotient and remainder over Q; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact division; throws DomainError if the remainder is nonzero.
    Poly divide_exact(const Poly& divisor) const;
    bool divides(const Poly& dividend) const;

    /// Primitive integer-coefficient image: p = content * primitive,
    /// content > 0 rational, primitive has integer coprime coefficients
    /// with positive leading coefficient.
    Poly primitive_part() const;

    /// Largest k with (x - r)^k dividing the polynomial.
    int root_multiplicity(const Rational& r) const;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd via primitive pseudo-remainder sequences.
Poly poly_gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'): same distinct roots, all simple.
Poly squarefree_part(const Poly& p);

/// Monic polynomial with the given rational root multiset.
Poly poly_from_roots(const std::vector<Rational>& roots);

/// Monic polynomial from quadratic-field roots; conjugate roots must pair
/// up so that every coefficient is rational, else FieldError.
Poly poly_from_quad_roots(const std::vector<QuadExt>& roots);

}  // namespace niep
