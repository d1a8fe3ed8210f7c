#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "posdiag/rational.hpp"

namespace posdiag {

/// Exponent vector aligned with a ring's generator list.
using Monomial = std::vector<unsigned>;

/// Lexicographic order with the *last* generator most significant.
/// Rewrite rules are oriented so that the head is the largest monomial;
/// linear relations therefore eliminate the lexicographically last generator.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

using TermMap = std::map<Monomial, Rational, MonomialOrder>;

struct Generator {
    std::string name;
    unsigned degree = 1;
};

struct RewriteRule {
    Monomial head;
    TermMap tail; // head == tail in the quotient; every tail monomial < head
};

class RingPresentation;
using Ring = std::shared_ptr<const RingPresentation>;

/// A graded commutative ring given by generators, vanishing monomials,
/// degree-preserving monomial rewrite rules, a top degree, and an
/// integration functional on the top-degree monomial basis.
///
/// The supported presentations are the confluent ones this project ships
/// (truncated polynomial rings, their tensor squares, Stanley-Reisner plus
/// linear rewrites, and the blow-up ring); there is no completion engine.
class RingPresentation {
public:
    const std::vector<Generator>& generators() const { return gens_; }
    unsigned top_degree() const { return top_degree_; }

    std::size_t generator_index(std::string_view name) const;

    unsigned monomial_degree(const Monomial& m) const;

    /// Rewrites a linear combination to normal form: truncates above the
    /// top degree and per-block caps, kills vanishing monomials, applies
    /// rules to completion. Deterministic (largest monomial first).
    TermMap normal_form(TermMap terms) const;

    bool is_normal_monomial(const Monomial& m) const;

    /// All normal-form monomials of the given degree, sorted.
    std::vector<Monomial> basis(unsigned degree) const;

    /// Integration value of a normal-form top-degree monomial.
    Rational integral_of(const Monomial& m) const;

    std::string format(const TermMap& terms) const;

private:
    friend class RingBuilder;
    RingPresentation() = default;

    // returns nullptr when irreducible
    const RewriteRule* find_rule(const Monomial& m) const;
    bool killed(const Monomial& m) const;

    std::vector<Generator> gens_;
    std::vector<Monomial> vanishing_;
    std::vector<RewriteRule> rules_; // sorted by head, largest first
    unsigned top_degree_ = 0;
    std::map<Monomial, Rational, MonomialOrder> integrals_;
    // per-block degree caps; block 0 is always (all generators, top degree)
    std::vector<std::pair<std::vector<char>, unsigned>> blocks_;
};

class RingBuilder {
public:
    std::size_t add_generator(std::string name, unsigned degree = 1);
    void add_vanishing(Monomial m);
    void add_rule(Monomial head, TermMap tail);
    void set_top_degree(unsigned d) { top_degree_ = d; }
    void add_block(const std::vector<std::size_t>& gen_indices, unsigned cap);
    void set_integral(Monomial m, Rational value);

    std::size_t generator_count() const { return gens_.size(); }

    /// Validates rule orientation / homogeneity and freezes the presentation.
    Ring build() const;

private:
    std::vector<Generator> gens_;
    std::vector<Monomial> vanishing_;
    std::vector<RewriteRule> rules_;
    unsigned top_degree_ = 0;
    std::vector<std::pair<std::vector<char>, unsigned>> blocks_;
    std::map<Monomial, Rational, MonomialOrder> integrals_;
};

/// Homogeneous class in a ring presentation, stored in normal form.
class CycleClass {
public:
    CycleClass(Ring ring, unsigned degree); // zero class
    static CycleClass monomial(Ring ring, const Monomial& m, const Rational& coeff = Rational(1));
    static CycleClass generator(Ring ring, std::string_view name);
    static CycleClass unit(Ring ring) { return CycleClass(std::move(ring), 0) += Rational(1); }

    const Ring& ring() const { return ring_; }
    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    CycleClass operator+(const CycleClass& o) const;
    CycleClass operator-(const CycleClass& o) const;
    CycleClass operator-() const;
    CycleClass operator*(const CycleClass& o) const;
    CycleClass operator*(const Rational& c) const;
    CycleClass& operator+=(const Rational& c); // adds c * 1, degree 0 only

    bool operator==(const CycleClass& o) const;

    std::string str() const { return ring_->format(terms_); }

private:
    Ring ring_;
    unsigned degree_;
    TermMap terms_;
};

/// Intersection product. Operands must share a ring.
CycleClass ring_mul(const CycleClass& a, const CycleClass& b);

/// Degree map: integrates a top-degree class.
Rational ring_integrate(const CycleClass& a);

/// c * a for scalars on the left.
inline CycleClass operator*(const Rational& c, const CycleClass& a) { return a * c; }

/// Convenience: monomial from generator-name exponents.
Monomial make_monomial(const Ring& ring, const std::vector<std::pair<std::string, unsigned>>& exps);

} // namespace posdiag
