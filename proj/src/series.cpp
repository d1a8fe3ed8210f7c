#include "posdiag/series.hpp"

namespace posdiag {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, unsigned cap)
    : coeff_(std::move(coeffs)) {
    coeff_.resize(cap + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(unsigned cap) {
    TruncatedSeries s(cap);
    s[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (cap() != o.cap()) throw usage_error("series cap mismatch");
    TruncatedSeries out(cap());
    for (unsigned d = 0; d <= cap(); ++d) out[d] = coeff_[d] + o[d];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (cap() != o.cap()) throw usage_error("series cap mismatch");
    TruncatedSeries out(cap());
    for (unsigned d = 0; d <= cap(); ++d) out[d] = coeff_[d] - o[d];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (cap() != o.cap()) throw usage_error("series cap mismatch");
    TruncatedSeries out(cap());
    for (unsigned i = 0; i <= cap(); ++i) {
        if (coeff_[i] == 0) continue;
        for (unsigned j = 0; i + j <= cap(); ++j) out[i + j] += coeff_[i] * o[j];
    }
    return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (s[0] == 0) throw usage_error("series_inverse: constant term is zero");
    TruncatedSeries inv(s.cap());
    inv[0] = Rational(1) / s[0];
    // [s * inv]_d = 0 for d >= 1 solved degree by degree
    for (unsigned d = 1; d <= s.cap(); ++d) {
        Rational acc(0);
        for (unsigned i = 1; i <= d; ++i) acc += s[i] * inv[d - i];
        inv[d] = -acc / s[0];
    }
    return inv;
}

} // namespace posdiag
