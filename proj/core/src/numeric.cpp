#include "niep/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "niep/errors.hpp"

namespace niep {

NumericMatrix to_numeric(const MatrixQ& A) {
    const int n = A.dim();
    NumericMatrix out(n, NumericVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = A.at(i, j).to_double();
    return out;
}

NumericMatrix to_numeric(const MatrixQuad& A) {
    const int n = A.dim();
    NumericMatrix out(n, NumericVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = A.at(i, j).to_double();
    return out;
}

namespace {

double offdiag_norm(const NumericMatrix& m) {
    double s = 0;
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
}

void canonicalize_sign(NumericVector& v, double tol) {
    for (double x : v) {
        if (std::abs(x) > tol) {
            if (x < 0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

}  // namespace

std::vector<EigenPair> symmetric_eigen(const NumericMatrix& A, double tol) {
    const size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw DomainError("symmetric_eigen: matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(A[i][j] - A[j][i]) > tol)
                throw DomainError("symmetric_eigen: asymmetric beyond tolerance");

    NumericMatrix m = A;
    // symmetrize the roundoff half
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = 0.5 * (m[i][j] + m[j][i]);

    NumericMatrix V(n, NumericVector(n, 0.0));
    for (size_t i = 0; i < n; ++i) V[i][i] = 1.0;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(m) >= tol; ++sweep) {
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = m[p][q];
                if (apq == 0.0) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - s * vkq;
                    V[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<EigenPair> pairs(n);
    for (size_t j = 0; j < n; ++j) {
        pairs[j].value = m[j][j];
        pairs[j].vector.resize(n);
        double norm = 0;
        for (size_t i = 0; i < n; ++i) norm += V[i][j] * V[i][j];
        norm = std::sqrt(norm);
        for (size_t i = 0; i < n; ++i) pairs[j].vector[i] = V[i][j] / norm;
        canonicalize_sign(pairs[j].vector, tol);
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
    return pairs;
}

SignPattern sign_pattern(const NumericVector& v, double tol) {
    SignPattern sp;
    sp.tolerance = tol;
    for (double x : v) {
        if (x > tol)
            ++sp.positives;
        else if (x < -tol)
            ++sp.negatives;
        else
            ++sp.zeros;
    }
    return sp;
}

NumericVector perron_vector(const NumericMatrix& A) {
    const size_t n = A.size();
    double max_diag = 0;
    for (size_t i = 0; i < n; ++i) {
        max_diag = std::max(max_diag, A[i][i]);
        for (size_t j = 0; j < n; ++j)
            if (A[i][j] < 0) throw DomainError("perron_vector: matrix has a negative entry");
    }
    const double c = 1.0 + max_diag;

    NumericVector x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < 100000; ++it) {
        NumericVector y(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) y[i] += A[i][j] * x[j];
            y[i] += c * x[i];
        }
        double norm = 0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        double delta = 0;
        for (size_t i = 0; i < n; ++i) {
            y[i] /= norm;
            delta = std::max(delta, std::abs(y[i] - x[i]));
        }
        x = std::move(y);
        if (delta < 1e-12) break;
    }
    return x;
}

}  // namespace niep
