#pragma once

#include <iosfwd>
#include <string>

#include "niep/rational.hpp"

namespace niep {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)),
/// d a fixed squarefree positive integer shared by all entries of a matrix.
///
/// A value with b = 0 is field-agnostic and combines with any d.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadExt(int a) : a_(a), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, long d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// 0 when the value is rational (b = 0).
    long d() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of a + b*sqrt(d): compares a^2 against b^2*d when the
    /// two terms disagree in sign.
    int sign() const;

    /// a - b*sqrt(d).
    QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    double to_double() const;
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& q);

  private:
    // Throws FieldError on a d mismatch; returns the common d.
    static long join(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    long d_;
};

}  // namespace niep
