#include "niep/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "niep/errors.hpp"

namespace niep {

Spectrum::Spectrum(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("Spectrum: needs at least one value");
    std::sort(values_.begin(), values_.end(), [](const Rational& a, const Rational& b) { return b < a; });
}

int Spectrum::leading_multiplicity() const {
    int m = 1;
    while (m < n() && values_[m] == values_[0]) ++m;
    return m;
}

std::string Spectrum::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n(); ++i) os << (i ? ", " : "") << values_[i].str();
    os << ")";
    return os.str();
}

Rational power_sum(const Spectrum& sp, int k) {
    if (k < 1) throw DomainError("power_sum: k must be >= 1");
    Rational s(0);
    for (const auto& v : sp.values()) s += pow(v, static_cast<unsigned>(k));
    return s;
}

PowerSums compute_power_sums(const Spectrum& sp, int k_max) {
    if (k_max < 1) throw DomainError("compute_power_sums: k_max must be >= 1");
    PowerSums ps;
    ps.k_max = k_max;
    ps.s.assign(k_max + 1, Rational(0));
    // iterate the powers once instead of recomputing per k
    std::vector<Rational> pw(sp.values().begin(), sp.values().end());
    for (int k = 1; k <= k_max; ++k) {
        for (int i = 0; i < sp.n(); ++i) {
            ps.s[k] += pw[i];
            pw[i] *= sp[i];
        }
    }
    return ps;
}

}  // namespace niep
