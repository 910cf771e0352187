#include "niep/quadext.hpp"

#include <cmath>
#include <ostream>

namespace niep {

namespace {

bool squarefree(long d) {
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
        while (d % f == 0) d /= f;
    }
    return true;
}

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
    } else if (d_ <= 1 || !squarefree(d_)) {
        throw FieldError("QuadExt: d must be a squarefree integer > 1, got " + std::to_string(d));
    }
}

long QuadExt::join(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw FieldError("QuadExt: mixing sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                     std::to_string(y.d_) + ")");
}

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) pull in opposite directions: compare a^2 with b^2*d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const long d = join(*this, o);
    const Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    const Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = nb.is_zero() ? 0 : d;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw DomainError("QuadExt: division by zero");
    const long d = join(*this, o);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // for nonzero elements since d is not a perfect square.
    const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
    if (norm.is_zero()) throw FieldError("QuadExt: zero norm (d is a perfect square?)");
    const QuadExt inv(o.a_ / norm, -o.b_ / norm, d == 0 ? 1 : d);
    return *this *= inv;
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + abs(b_).str() + "*sqrt(" +
           std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

}  // namespace niep
