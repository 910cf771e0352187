#include "niep/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace niep {

namespace {

template <ScalarField K>
bool strongly_connected(const Matrix<K>& A) {
    const int n = A.dim();
    if (n == 1) return true;
    // BFS over the pattern and its transpose, both from node 0
    auto reach = [&](bool transposed) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                const K& e = transposed ? A.at(v, u) : A.at(u, v);
                if (!e.is_zero() && !seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    stack.push_back(v);
                }
            }
        }
        return cnt == n;
    };
    return reach(false) && reach(true);
}

template <ScalarField K>
bool irreducible_impl(const Matrix<K>& A) {
    if (!A.is_nonnegative()) throw DomainError("is_irreducible: matrix has a negative entry");
    return strongly_connected(A);
}

// Euclidean gcd degree over the field K; enough to decide squarefreeness.
template <ScalarField K>
std::vector<K> kpoly_rem(std::vector<K> a, const std::vector<K>& b) {
    auto deg = [](const std::vector<K>& p) { return static_cast<int>(p.size()) - 1; };
    while (deg(a) >= deg(b)) {
        const K f = a.back() / b.back();
        const int shift = deg(a) - deg(b);
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = a[i + shift] - f * b[i];
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

template <ScalarField K>
bool minpoly_squarefree(const Matrix<K>& A) {
    std::vector<K> m = minpoly_coeffs(A);
    std::vector<K> d;
    for (size_t i = 1; i < m.size(); ++i) d.push_back(K(static_cast<int>(i)) * m[i]);
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    std::vector<K> a = m, b = d;
    while (!b.empty()) {
        auto r = kpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;  // constant gcd
}

template <ScalarField K>
VerificationReport verify_impl(const Matrix<K>& A, const Spectrum& sp) {
    if (A.dim() != sp.n())
        throw DomainError("verify_spectrum: matrix dimension " + std::to_string(A.dim()) +
                          " does not match spectrum size " + std::to_string(sp.n()));
    VerificationReport rep;
    const std::vector<K> actual = charpoly_coeffs(A);
    const Poly expected = poly_from_roots(sp.values());
    rep.charpoly_match = true;
    for (size_t i = 0; i < actual.size(); ++i) {
        if (!(actual[i] == K(expected.coeff(static_cast<int>(i))))) {
            rep.charpoly_match = false;
            break;
        }
    }
    if (!rep.charpoly_match) {
        std::string actual_str;
        for (size_t i = 0; i < actual.size(); ++i)
            actual_str += (i ? ", " : "") + actual[i].str();
        rep.details.emplace_back("expected_charpoly", expected.str());
        rep.details.emplace_back("actual_charpoly_coeffs", "[" + actual_str + "]");
    }
    rep.nonnegative = A.is_nonnegative();
    if (!rep.nonnegative) {
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j)
                if (A.at(i, j).sign() < 0) {
                    rep.details.emplace_back(
                        "negative_entry",
                        "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                            A.at(i, j).str());
                }
    }
    rep.symmetric = A.is_symmetric();
    rep.irreducible = rep.nonnegative ? strongly_connected(A) : false;
    rep.diagonalizable = minpoly_squarefree(A);
    return rep;
}

template <ScalarField K>
JordanReport jordan_impl(const Matrix<K>& A, const Rational& lam) {
    const int n = A.dim();
    const Poly cp = charpoly(A);
    const int mult = cp.root_multiplicity(lam);
    if (mult == 0)
        throw DomainError("jordan_structure: " + lam.str() + " is not an eigenvalue");

    Matrix<K> shifted = A;
    for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - K(lam);

    std::vector<int> r{n};  // r[k] = rank((A - lam I)^k)
    Matrix<K> power = Matrix<K>::identity(n);
    for (int k = 1; k <= n; ++k) {
        power = power * shifted;
        r.push_back(rank(power));
        if (r[k] == r[k - 1]) break;  // rank sequence has stabilized
    }
    while (static_cast<int>(r.size()) <= n + 1) r.push_back(r.back());

    JordanReport rep;
    rep.eigenvalue = lam;
    rep.algebraic_multiplicity = mult;
    // number of blocks of size >= k is r[k-1] - r[k]
    for (int size = n; size >= 1; --size) {
        const int count = (r[size - 1] - r[size]) - (r[size] - r[size + 1]);
        for (int c = 0; c < count; ++c) rep.block_sizes.push_back(size);
    }
    return rep;
}

}  // namespace

VerificationReport verify_spectrum(const MatrixQ& A, const Spectrum& sp) {
    return verify_impl(A, sp);
}
VerificationReport verify_spectrum(const MatrixQuad& A, const Spectrum& sp) {
    return verify_impl(A, sp);
}

bool is_irreducible(const MatrixQ& A) { return irreducible_impl(A); }
bool is_irreducible(const MatrixQuad& A) { return irreducible_impl(A); }

bool is_diagonalizable(const MatrixQ& A) { return minpoly_squarefree(A); }
bool is_diagonalizable(const MatrixQuad& A) { return minpoly_squarefree(A); }

JordanReport jordan_structure(const MatrixQ& A, const Rational& lam) {
    return jordan_impl(A, lam);
}
JordanReport jordan_structure(const MatrixQuad& A, const Rational& lam) {
    return jordan_impl(A, lam);
}

bool check_cubic_annihilator(const MatrixQ& A, const Rational& t) {
    const Poly p = poly_from_roots(
        std::vector<Rational>{Rational(3) + t, Rational(3) - t, Rational(-2)});
    return matrix_poly_eval(p, A).is_zero();
}

namespace {

using Rect = std::vector<std::vector<Rational>>;

Rect rect_block(const MatrixQ& B, int r0, int c0, int rows, int cols) {
    Rect out(rows, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i][j] = B.at(r0 + i, c0 + j);
    return out;
}

Rect rect_mul(const Rect& a, const Rect& b) {
    const size_t n = a.size(), m = b[0].size(), k = b.size();
    Rect out(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

}  // namespace

bool schur_rank_identity(const MatrixQ& B, int k) {
    const int n = B.dim();
    if (k < 1 || k >= n) throw DomainError("schur_rank_identity: block size out of range");
    const MatrixQ B11 = B.block(0, 0, k);
    MatrixQ B11_inv(k);
    try {
        B11_inv = inverse(B11);
    } catch (const SingularMatrixError&) {
        throw DomainError("schur_rank_identity: leading block is singular");
    }

    Rect inv(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) inv[i][j] = B11_inv.at(i, j);

    const Rect B12 = rect_block(B, 0, k, k, n - k);
    const Rect B21 = rect_block(B, k, 0, n - k, k);
    const Rect B22 = rect_block(B, k, k, n - k, n - k);
    const Rect prod = rect_mul(rect_mul(B21, inv), B12);

    const bool holds = (prod == B22);
    if (rank(B) == k && !holds)
        throw std::logic_error(
            "schur_rank_identity: rank(B) == rank(B11) but the Schur complement is nonzero");
    return holds;
}

}  // namespace niep
