#include "niep/rational.hpp"

#include <cmath>
#include <ostream>

namespace niep {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(static_cast<long int>(n), static_cast<long int>(d));
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    std::string body = s;
    // trim surrounding whitespace
    const auto first = body.find_first_not_of(" \t\r\n");
    const auto last = body.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw DomainError("Rational: empty string");
    body = body.substr(first, last - first + 1);

    const auto dot = body.find('.');
    if (dot != std::string::npos) {
        if (body.find('/') != std::string::npos)
            throw DomainError("Rational: mixed decimal and fraction notation: " + body);
        std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        const size_t frac_len = body.size() - dot - 1;
        if (frac_len == 0) throw DomainError("Rational: trailing dot: " + body);
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw DomainError("Rational: cannot parse: " + body);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }

    mpq_class q;
    if (q.set_str(body, 10) != 0 || q.get_den() == 0)
        throw DomainError("Rational: cannot parse: " + body);
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned k) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), k);
    return Rational(mpq_class(n, d));  // already canonical: gcd(n,d)=1 is preserved by powers
}

Rational rational_round(double x, unsigned digits) {
    if (!std::isfinite(x)) throw DomainError("rational_round: non-finite value");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
    mpf_class scaled(x, 256);
    scaled *= mpf_class(den, 256);
    mpz_class num;
    // round half away from zero
    mpf_class half = scaled >= 0 ? mpf_class(0.5, 256) : mpf_class(-0.5, 256);
    mpz_set_f(num.get_mpz_t(), mpf_class(scaled + half).get_mpf_t());
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

}  // namespace niep
