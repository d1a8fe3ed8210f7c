#include "posdiag/rational.hpp"

namespace posdiag {

std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (!is_integer(r)) {
        s += "/" + den(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q == 0) throw data_error("rational with zero denominator: " + text);
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw data_error("cannot parse rational: '" + text + "'");
    }
}

Int isqrt(const Int& x) {
    if (x < 0) throw usage_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const Int& x) {
    if (x < 0) return false;
    Int s = boost::multiprecision::sqrt(x);
    return s * s == x;
}

Rational pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

} // namespace posdiag
