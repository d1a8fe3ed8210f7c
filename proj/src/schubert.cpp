#include "posdiag/schubert.hpp"

#include "posdiag/errors.hpp"

namespace posdiag {

SchubertExpansion schubert_mul(const SchubertExpansion& x, const SchubertExpansion& y) {
    SchubertExpansion out;
    for (const auto& [ex, cx] : x) {
        for (const auto& [ey, cy] : y) {
            auto key = std::make_pair(ex.first + ey.first, ex.second + ey.second);
            Rational& acc = out[key];
            acc += cx * cy;
            if (acc == 0) out.erase(key);
        }
    }
    return out;
}

namespace {

SchubertExpansion add(SchubertExpansion a, const SchubertExpansion& b, const Rational& scale) {
    for (const auto& [e, c] : b) {
        Rational& acc = a[e];
        acc += c * scale;
        if (acc == 0) a.erase(e);
    }
    return a;
}

// P_0 = 1, P_1 = S1, P_k = S1*P_{k-1} - S11*P_{k-2}
SchubertExpansion one_row(unsigned k) {
    SchubertExpansion prev{{{0, 0}, Rational(1)}};
    if (k == 0) return prev;
    SchubertExpansion cur{{{1, 0}, Rational(1)}};
    const SchubertExpansion s1{{{1, 0}, Rational(1)}};
    const SchubertExpansion s11{{{0, 1}, Rational(1)}};
    for (unsigned i = 2; i <= k; ++i) {
        SchubertExpansion next = add(schubert_mul(s1, cur), schubert_mul(s11, prev), Rational(-1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

SchubertPoly schubert_poly(unsigned a, unsigned b) {
    if (a < b) throw usage_error("schubert_poly: partition must satisfy a >= b");
    SchubertPoly p;
    p.a = a;
    p.b = b;
    SchubertExpansion s11_pow{{{0, b}, Rational(1)}};
    p.expansion = schubert_mul(s11_pow, one_row(a - b));
    return p;
}

} // namespace posdiag
