#include "niep/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace niep {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(Rational v, int k) {
    Poly p;
    if (!v.is_zero()) {
        p.c_.assign(k + 1, Rational(0));
        p.c_.back() = std::move(v);
    }
    return p;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw DomainError("Poly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadExt Poly::operator()(const QuadExt& x) const {
    QuadExt acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadExt(*it);
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

Poly operator*(const Rational& s, Poly p) {
    for (auto& v : p.c_) v *= s;
    p.trim();
    return p;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DomainError("Poly: division by the zero polynomial");
    Poly rem(*this);
    Poly quot;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) quot.c_.assign(rem.degree() - dd + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int k = rem.degree() - dd;
        const Rational f = rem.leading() / divisor.leading();
        quot.c_[k] = f;
        for (int i = 0; i <= dd; ++i) rem.c_[k + i] -= f * divisor.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw DomainError("Poly: inexact division");
    return q;
}

bool Poly::divides(const Poly& dividend) const {
    if (is_zero()) return dividend.is_zero();
    return dividend.divmod(*this).second.is_zero();
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    // lcm of denominators
    mpz_class den_lcm(1);
    for (const auto& v : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.den().get_mpz_t());
    // gcd of scaled numerators
    mpz_class g(0);
    std::vector<mpz_class> scaled(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        scaled[i] = c_[i].num() * (den_lcm / c_[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    if (sgn(scaled.back()) < 0) g = -g;
    Poly r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = Rational(mpz_class(scaled[i] / g));
    return r;
}

int Poly::root_multiplicity(const Rational& r) const {
    if (is_zero()) throw DomainError("Poly: zero polynomial");
    int m = 0;
    Poly cur(*this);
    const Poly lin{-r, Rational(1)};
    while (cur(r).is_zero()) {
        cur = cur.divide_exact(lin);
        ++m;
        if (cur.is_zero()) break;
    }
    return m;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& v = c_[k];
        if (v.is_zero()) continue;
        if (!first) os << (v.sign() > 0 ? " + " : " - ");
        else if (v.sign() < 0) os << "-";
        first = false;
        const Rational a = abs(v);
        const bool unit = (a == Rational(1));
        if (k == 0 || !unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

// One step of pseudo-division on primitive integer polynomials.
Poly pseudo_rem(const Poly& a, const Poly& b) {
    Poly rem(a);
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int k = rem.degree() - db;
        rem = lb * rem - rem.leading() * (Poly::monomial(Rational(1), k) * b);
    }
    return rem;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly f = a.primitive_part();
    Poly g = b.primitive_part();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rational(1));
    const Poly g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).monic();
}

Poly poly_from_roots(const std::vector<Rational>& roots) {
    Poly p = Poly::constant(Rational(1));
    for (const auto& r : roots) p *= Poly{-r, Rational(1)};
    return p;
}

Poly poly_from_quad_roots(const std::vector<QuadExt>& roots) {
    // expand over the quadratic field, then require rational coefficients
    std::vector<QuadExt> acc{QuadExt(Rational(1))};
    for (const auto& r : roots) {
        std::vector<QuadExt> next(acc.size() + 1);
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * (-r);
            next[i + 1] += acc[i];
        }
        acc = std::move(next);
    }
    std::vector<Rational> c(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (!acc[i].is_rational())
            throw FieldError("poly_from_quad_roots: unpaired quadratic root leaves coefficient " +
                             acc[i].str() + " irrational");
        c[i] = acc[i].a();
    }
    return Poly(std::move(c));
}

}  // namespace niep
