#include "niep/meehan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "niep/errors.hpp"

namespace niep {

NumericMatrix meehan_matrix(double t, double p, double q, double w, double h) {
    return {{t, 1, 0, 0, 0},
            {p, 0, 1, 0, 0},
            {0, q, 0, 1, 0},
            {0, 0, 0, 0, 1},
            {0, 0, w, h, 0}};
}

namespace {

// charpoly of the structured form, low-degree coefficients:
//   x^5 - t x^4 - (p+q+h) x^3 + (t(h+q) - w) x^2 + (h(p+q) + t w) x + (p w - t q h)
// target (x-(3+t))(x-3)(x+2)^3:
//   x^5 - t x^4 - (15+3t) x^3 + (6t-10) x^2 + (60+28t) x + (72+24t)
struct System {
    double t;

    std::array<double, 4> value(double p, double q, double w, double h) const {
        return {
            (p * w - t * q * h) - (72 + 24 * t),            // degree 0
            (h * (p + q) + t * w) - (60 + 28 * t),          // degree 1
            (t * (h + q) - w) - (6 * t - 10),               // degree 2
            -(p + q + h) + (15 + 3 * t),                    // degree 3
        };
    }

    // rows follow the residual order above, columns are d/dp, d/dq, d/dw, d/dh
    std::array<std::array<double, 4>, 4> jacobian(double p, double q, double w, double h) const {
        return {{{w, -t * h, p, -t * q},
                 {h, h, t, p + q},
                 {0, t, -1, t},
                 {-1, -1, 0, -1}}};
    }
};

double max_abs(const std::array<double, 4>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// solve J dx = -r in place; returns false when the pivot collapses
bool solve4(std::array<std::array<double, 4>, 4> J, std::array<double, 4> r,
            std::array<double, 4>& dx) {
    std::array<int, 4> perm{0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int i = col + 1; i < 4; ++i)
            if (std::abs(J[perm[i]][col]) > std::abs(J[perm[piv]][col])) piv = i;
        std::swap(perm[col], perm[piv]);
        const double d = J[perm[col]][col];
        if (std::abs(d) < 1e-300) return false;
        for (int i = col + 1; i < 4; ++i) {
            const double f = J[perm[i]][col] / d;
            if (f == 0) continue;
            for (int j = col; j < 4; ++j) J[perm[i]][j] -= f * J[perm[col]][j];
            r[perm[i]] -= f * r[perm[col]];
        }
    }
    for (int col = 3; col >= 0; --col) {
        double s = -r[perm[col]];
        for (int j = col + 1; j < 4; ++j) s -= J[perm[col]][j] * dx[j];
        dx[col] = s / J[perm[col]][col];
    }
    return true;
}

}  // namespace

std::array<double, 4> meehan_residual_vector(double t, double p, double q, double w, double h) {
    return System{t}.value(p, q, w, h);
}

FitResult meehan_fit(double t, int attempts) {
    if (!(t > 0)) throw DomainError("meehan_fit: t must be positive");
    if (attempts < 1) throw DomainError("meehan_fit: attempts must be >= 1");

    const System sys{t};
    static constexpr double kSeeds[4] = {0.5, 2.0, 5.0, 10.0};
    const int total = std::min(attempts, 256);

    FitResult best;
    bool found = false;
    double best_failed_residual = std::numeric_limits<double>::infinity();

    for (int seed = 0; seed < total; ++seed) {
        double p = kSeeds[seed & 3];
        double q = kSeeds[(seed >> 2) & 3];
        double w = kSeeds[(seed >> 4) & 3];
        double h = kSeeds[(seed >> 6) & 3];

        int it = 0;
        double res = max_abs(sys.value(p, q, w, h));
        for (; it < 200 && res >= 1e-12; ++it) {
            std::array<double, 4> dx{};
            if (!solve4(sys.jacobian(p, q, w, h), sys.value(p, q, w, h), dx)) break;
            // step halving until the residual decreases
            double lambda = 1.0;
            bool accepted = false;
            for (int half = 0; half < 60; ++half) {
                const double np = p + lambda * dx[0];
                const double nq = q + lambda * dx[1];
                const double nw = w + lambda * dx[2];
                const double nh = h + lambda * dx[3];
                const double nres = max_abs(sys.value(np, nq, nw, nh));
                if (nres < res) {
                    p = np, q = nq, w = nw, h = nh;
                    res = nres;
                    accepted = true;
                    break;
                }
                lambda *= 0.5;
            }
            if (!accepted) break;  // stalled at a local minimum
        }

        if (res < 1e-12) {
            // recompute, never trust the loop value
            const double recomputed = max_abs(sys.value(p, q, w, h));
            if (!found || recomputed < best.residual) {
                best.p = p, best.q = q, best.w = w, best.h = h;
                best.residual = recomputed;
                best.nonnegative = std::min(std::min(p, q), std::min(w, h)) >= -1e-10;
                best.seed_index = seed;
                best.iterations = it;
                found = true;
            }
        } else {
            best_failed_residual = std::min(best_failed_residual, res);
        }
    }

    if (!found)
        throw ConvergenceError("meehan_fit: no start converged at t = " + std::to_string(t),
                               best_failed_residual);
    return best;
}

}  // namespace niep
