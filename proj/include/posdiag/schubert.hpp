#pragma once

#include <map>
#include <utility>

#include "posdiag/rational.hpp"

namespace posdiag {

/// Polynomial in the two abstract symbols S1 (the hyperplane Schubert class)
/// and S11 (the rank-two special class), keyed by (S1 exponent, S11 exponent).
using SchubertExpansion = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Two-row Schubert class written in terms of S1 and S11 via the Pieri
/// recursion P_k = S1*P_{k-1} - S11*P_{k-2}, with sigma_{a,b} = S11^b * P_{a-b}.
struct SchubertPoly {
    unsigned a = 0;
    unsigned b = 0;
    SchubertExpansion expansion;
};

/// sigma_{a,b} for a >= b >= 0; usage_error otherwise.
SchubertPoly schubert_poly(unsigned a, unsigned b);

SchubertExpansion schubert_mul(const SchubertExpansion& x, const SchubertExpansion& y);

} // namespace posdiag
