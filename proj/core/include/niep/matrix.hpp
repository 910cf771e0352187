#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "niep/poly.hpp"
#include "niep/quadext.hpp"
#include "niep/rational.hpp"

namespace niep {

template <class K>
concept ScalarField = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a* b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    K(1);
    K(0);
};

/// Dense square matrix over an exact scalar field (Rational or QuadExt).
template <ScalarField K>
class Matrix {
  public:
    Matrix() : n_(0) {}
    explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, K(0)) {
        if (n < 1) throw DomainError("Matrix: dimension must be positive");
    }
    Matrix(int n, std::vector<K> entries) : n_(n), e_(std::move(entries)) {
        if (n < 1 || e_.size() != static_cast<size_t>(n) * n)
            throw DomainError("Matrix: entry count does not match dimension");
    }
    /// Row-major nested initializer, each row of length n.
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        n_ = static_cast<int>(rows.size());
        e_.reserve(static_cast<size_t>(n_) * n_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_)
                throw DomainError("Matrix: ragged initializer");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int dim() const { return n_; }
    K& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const K& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<K>& entries() const { return e_; }

    Matrix transpose() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// rows [r0, r0+rows) x cols [c0, c0+cols) as a rows x cols block;
    /// only square blocks are representable, so rows == cols is required.
    Matrix block(int r0, int c0, int size) const {
        if (r0 < 0 || c0 < 0 || r0 + size > n_ || c0 + size > n_)
            throw DomainError("Matrix: block out of range");
        Matrix b(size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) b.at(i, j) = at(r0 + i, c0 + j);
        return b;
    }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    /// True when every entry has sign >= 0 (requires K to expose sign()).
    bool is_nonnegative() const {
        for (const auto& v : e_)
            if (v.sign() < 0) return false;
        return true;
    }

    K trace() const {
        K t(0);
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_dim(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] + o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_dim(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] - o.e_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_dim(b);
        Matrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const K& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator*(const K& s, Matrix m) {
        for (auto& v : m.e_) v = s * v;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

  private:
    void check_dim(const Matrix& o) const {
        if (n_ != o.n_) throw DomainError("Matrix: dimension mismatch");
    }

    int n_ = 0;
    std::vector<K> e_;
};

using MatrixQ = Matrix<Rational>;
using MatrixQuad = Matrix<QuadExt>;

/// Characteristic polynomial coefficients (lowest degree first, monic) by
/// the Faddeev-LeVerrier trace recursion; exact over any field of
/// characteristic zero.
template <ScalarField K>
std::vector<K> charpoly_coeffs(const Matrix<K>& A) {
    const int n = A.dim();
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Matrix<K> M = A;
    for (int k = 1; k <= n; ++k) {
        K t = M.trace();
        c[n - k] = -(t / K(k));
        if (k < n) {
            Matrix<K> shifted = M;
            for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + c[n - k];
            M = A * shifted;
        }
    }
    return c;
}

namespace detail {

inline Rational require_rational(const Rational& v) { return v; }
inline Rational require_rational(const QuadExt& v) {
    if (!v.is_rational())
        throw FieldError("matrix polynomial has irrational coefficient " + v.str());
    return v.a();
}

template <ScalarField K>
Poly to_poly(const std::vector<K>& coeffs) {
    std::vector<Rational> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = require_rational(coeffs[i]);
    return Poly(std::move(c));
}

// Reduce a row against the pivots of an echelon basis; returns the reduced
// row. rows[i] is normalized to have a unit leading entry at lead[i].
template <ScalarField K>
std::vector<K> eliminate(const std::vector<std::vector<K>>& rows, const std::vector<int>& lead,
                         std::vector<K> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const K& f = v[lead[r]];
        if (f.is_zero()) continue;
        const K factor = f;
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - factor * rows[r][j];
    }
    return v;
}

}  // namespace detail

/// det(xI - A), monic degree-n characteristic polynomial. For QuadExt
/// matrices the result must have rational coefficients, else FieldError.
template <ScalarField K>
Poly charpoly(const Matrix<K>& A) {
    return detail::to_poly(charpoly_coeffs(A));
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <ScalarField K>
K det_bareiss(Matrix<K> m) {
    const int n = m.dim();
    K sign(1);
    K prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { p = i; break; }
            if (p < 0) return K(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = K(0);
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

/// Exact rank by fraction-free Gaussian elimination with pivot search.
template <ScalarField K>
int rank(Matrix<K> m) {
    const int n = m.dim();
    int r = 0;
    K prev(1);
    for (int col = 0; col < n && r < n; ++col) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < n; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (int i = r + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                m.at(i, j) = (m.at(r, col) * m.at(i, j) - m.at(i, col) * m.at(r, j)) / prev;
            m.at(i, col) = K(0);
        }
        prev = m.at(r, col);
        ++r;
    }
    return r;
}

/// Exact inverse by Gauss-Jordan; throws SingularMatrixError (with the
/// exact rank) when det(A) = 0.
template <ScalarField K>
Matrix<K> inverse(const Matrix<K>& A) {
    const int n = A.dim();
    Matrix<K> m = A;
    Matrix<K> inv = Matrix<K>::identity(n);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) throw SingularMatrixError("inverse: singular matrix", rank(A));
        if (p != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(col, j), m.at(p, j));
                std::swap(inv.at(col, j), inv.at(p, j));
            }
        const K piv = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) / piv;
            inv.at(col, j) = inv.at(col, j) / piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            const K f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Minimal polynomial coefficients over K: least-degree monic annihilator,
/// found by exact elimination over the vectorized powers I, A, A^2, ...
template <ScalarField K>
std::vector<K> minpoly_coeffs(const Matrix<K>& A) {
    const int n = A.dim();
    const size_t nn = static_cast<size_t>(n) * n;

    std::vector<std::vector<K>> basis;   // echelon rows over K, length nn + n + 1
    std::vector<int> lead;               // pivot column per basis row

    Matrix<K> P = Matrix<K>::identity(n);
    for (int k = 0;; ++k) {
        // augmented row: vec(A^k) followed by the k-th unit coordinate,
        // so elimination tracks the combination expressing the dependency.
        std::vector<K> row(nn + n + 1, K(0));
        for (size_t i = 0; i < nn; ++i) row[i] = P.entries()[i];
        row[nn + k] = K(1);

        row = detail::eliminate(basis, lead, std::move(row));

        int pivot = -1;
        for (size_t j = 0; j < nn; ++j)
            if (!row[j].is_zero()) { pivot = static_cast<int>(j); break; }

        if (pivot < 0) {
            // dependency found: row tail holds c_0..c_k with c_k = 1 scaled
            std::vector<K> coeffs(k + 1);
            const K lead_c = row[nn + k];
            for (int j = 0; j <= k; ++j) coeffs[j] = row[nn + j] / lead_c;
            return coeffs;
        }

        const K piv = row[pivot];
        for (auto& v : row) v = v / piv;
        basis.push_back(std::move(row));
        lead.push_back(pivot);
        P = P * A;
    }
}

template <ScalarField K>
Poly minpoly(const Matrix<K>& A) {
    return detail::to_poly(minpoly_coeffs(A));
}

/// p(A) by Horner on matrices.
template <ScalarField K>
Matrix<K> matrix_poly_eval(const Poly& p, const Matrix<K>& A) {
    const int n = A.dim();
    Matrix<K> acc(n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * A;
        const Rational c = p.coeff(k);
        if (!c.is_zero())
            for (int i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + K(c);
    }
    return acc;
}

/// Embeds a rational matrix into Q(sqrt(d)).
MatrixQuad to_quad(const MatrixQ& A);

}  // namespace niep
