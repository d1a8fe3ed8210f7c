#pragma once

#include <vector>

#include "posdiag/rational.hpp"

namespace posdiag {

/// Power series in one variable truncated above a fixed degree cap.
/// Arithmetic never reads or writes above the cap.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned cap) : coeff_(cap + 1, Rational(0)) {}
    TruncatedSeries(std::vector<Rational> coeffs, unsigned cap);

    static TruncatedSeries one(unsigned cap);

    unsigned cap() const { return static_cast<unsigned>(coeff_.size()) - 1; }
    const Rational& operator[](unsigned d) const { return coeff_[d]; }
    Rational& operator[](unsigned d) { return coeff_[d]; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

private:
    std::vector<Rational> coeff_; // coeff_[d] is the degree-d coefficient
};

/// Multiplicative inverse up to the cap. The constant term must be nonzero.
TruncatedSeries series_inverse(const TruncatedSeries& s);

} // namespace posdiag
