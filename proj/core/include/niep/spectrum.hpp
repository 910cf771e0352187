#pragma once

#include <string>
#include <vector>

#include "niep/rational.hpp"

namespace niep {

/// Multiset of exact real values proposed as the spectrum of a nonnegative
/// matrix; kept sorted descending.
class Spectrum {
  public:
    explicit Spectrum(std::vector<Rational> values);

    int n() const { return static_cast<int>(values_.size()); }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& operator[](int i) const { return values_[i]; }

    /// Number of entries equal to the largest value.
    int leading_multiplicity() const;

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.values_ == b.values_;
    }

    std::string str() const;

  private:
    std::vector<Rational> values_;
};

/// s[k] = sum of k-th powers, k = 1..k_max.
struct PowerSums {
    int k_max = 0;
    std::vector<Rational> s;  // s[0] unused; s[k] for k >= 1

    const Rational& at(int k) const { return s.at(k); }
};

/// Exact sum of k-th powers; k >= 1.
Rational power_sum(const Spectrum& sp, int k);

PowerSums compute_power_sums(const Spectrum& sp, int k_max);

}  // namespace niep
