#include "posdiag/ring.hpp"

#include <algorithm>

#include "posdiag/errors.hpp"

namespace posdiag {

namespace {

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] > m[i]) return false;
    }
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
    Monomial q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
    return q;
}

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
    return p;
}

} // namespace

std::size_t RingPresentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name == name) return i;
    }
    throw usage_error("no generator named '" + std::string(name) + "'");
}

unsigned RingPresentation::monomial_degree(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

bool RingPresentation::killed(const Monomial& m) const {
    for (const auto& [mask, cap] : blocks_) {
        unsigned d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (mask[i]) d += m[i] * gens_[i].degree;
        }
        if (d > cap) return true;
    }
    for (const auto& v : vanishing_) {
        if (divides(v, m)) return true;
    }
    return false;
}

const RewriteRule* RingPresentation::find_rule(const Monomial& m) const {
    for (const auto& r : rules_) {
        if (divides(r.head, m)) return &r;
    }
    return nullptr;
}

TermMap RingPresentation::normal_form(TermMap terms) const {
    TermMap result;
    // Largest monomial first; every rewrite only produces smaller monomials,
    // so each work item is final once popped.
    while (!terms.empty()) {
        auto it = std::prev(terms.end());
        Monomial m = it->first;
        Rational c = it->second;
        terms.erase(it);
        if (c == 0) continue;
        if (killed(m)) continue;
        if (const RewriteRule* rule = find_rule(m)) {
            Monomial q = quotient(m, rule->head);
            for (const auto& [t, tc] : rule->tail) terms[product(t, q)] += tc * c;
            continue;
        }
        Rational& acc = result[m];
        acc += c;
        if (acc == 0) result.erase(m);
    }
    return result;
}

bool RingPresentation::is_normal_monomial(const Monomial& m) const {
    return !killed(m) && find_rule(m) == nullptr;
}

std::vector<Monomial> RingPresentation::basis(unsigned degree) const {
    std::vector<Monomial> out;
    Monomial current(gens_.size(), 0);
    // enumerate exponent vectors of the target total degree
    auto recurse = [&](auto&& self, std::size_t idx, unsigned remaining) -> void {
        if (idx == gens_.size()) {
            if (remaining == 0 && is_normal_monomial(current)) out.push_back(current);
            return;
        }
        unsigned gd = gens_[idx].degree;
        for (unsigned e = 0; e * gd <= remaining; ++e) {
            current[idx] = e;
            self(self, idx + 1, remaining - e * gd);
        }
        current[idx] = 0;
    };
    recurse(recurse, 0, degree);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

Rational RingPresentation::integral_of(const Monomial& m) const {
    auto it = integrals_.find(m);
    if (it == integrals_.end()) {
        throw verification_error("no integral defined for normal monomial " +
                                 format(TermMap{{m, Rational(1)}}));
    }
    return it->second;
}

std::string RingPresentation::format(const TermMap& terms) const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    // print largest monomials first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        first = false;
        Rational ac = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += gens_[i].name;
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += to_string(ac);
        } else {
            if (ac != 1) out += to_string(ac) + "*";
            out += mono;
        }
    }
    return out;
}

std::size_t RingBuilder::add_generator(std::string name, unsigned degree) {
    gens_.push_back({std::move(name), degree});
    return gens_.size() - 1;
}

void RingBuilder::add_vanishing(Monomial m) {
    if (m.size() != gens_.size()) throw usage_error("vanishing monomial arity mismatch");
    vanishing_.push_back(std::move(m));
}

void RingBuilder::add_rule(Monomial head, TermMap tail) {
    if (head.size() != gens_.size()) throw usage_error("rule head arity mismatch");
    rules_.push_back({std::move(head), std::move(tail)});
}

void RingBuilder::add_block(const std::vector<std::size_t>& gen_indices, unsigned cap) {
    std::vector<char> mask(gens_.size(), 0);
    for (auto i : gen_indices) mask.at(i) = 1;
    blocks_.emplace_back(std::move(mask), cap);
}

void RingBuilder::set_integral(Monomial m, Rational value) {
    integrals_[std::move(m)] = std::move(value);
}

Ring RingBuilder::build() const {
    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->gens_ = gens_;
    ring->vanishing_ = vanishing_;
    ring->rules_ = rules_;
    ring->top_degree_ = top_degree_;
    ring->integrals_ = integrals_;
    ring->blocks_.emplace_back(std::vector<char>(gens_.size(), 1), top_degree_);
    for (const auto& b : blocks_) ring->blocks_.push_back(b);

    MonomialOrder less;
    for (auto& rule : ring->rules_) {
        unsigned hd = ring->monomial_degree(rule.head);
        for (const auto& [t, c] : rule.tail) {
            if (ring->monomial_degree(t) != hd)
                throw usage_error("rewrite rule is not degree-preserving");
            if (!less(t, rule.head))
                throw usage_error("rewrite rule does not reduce the monomial order");
        }
    }
    std::sort(ring->rules_.begin(), ring->rules_.end(),
              [&](const RewriteRule& a, const RewriteRule& b) { return less(b.head, a.head); });
    return ring;
}

CycleClass::CycleClass(Ring ring, unsigned degree) : ring_(std::move(ring)), degree_(degree) {}

CycleClass CycleClass::monomial(Ring ring, const Monomial& m, const Rational& coeff) {
    CycleClass c(ring, ring->monomial_degree(m));
    c.terms_ = ring->normal_form(TermMap{{m, coeff}});
    return c;
}

CycleClass CycleClass::generator(Ring ring, std::string_view name) {
    std::size_t idx = ring->generator_index(name);
    Monomial m(ring->generators().size(), 0);
    m[idx] = 1;
    return monomial(std::move(ring), m);
}

Rational CycleClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

CycleClass CycleClass::operator+(const CycleClass& o) const {
    if (ring_ != o.ring_) throw usage_error("mixed-ring operands");
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw usage_error("adding classes of different degrees");
    CycleClass out(ring_, is_zero() ? o.degree_ : degree_);
    out.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) {
        Rational& acc = out.terms_[m];
        acc += c;
        if (acc == 0) out.terms_.erase(m);
    }
    return out;
}

CycleClass CycleClass::operator-(const CycleClass& o) const { return *this + (-o); }

CycleClass CycleClass::operator-() const {
    CycleClass out(ring_, degree_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

CycleClass CycleClass::operator*(const CycleClass& o) const {
    if (ring_ != o.ring_) throw usage_error("mixed-ring operands");
    TermMap raw;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial p(m1.size());
            for (std::size_t i = 0; i < m1.size(); ++i) p[i] = m1[i] + m2[i];
            raw[p] += c1 * c2;
        }
    }
    CycleClass out(ring_, degree_ + o.degree_);
    out.terms_ = ring_->normal_form(std::move(raw));
    return out;
}

CycleClass CycleClass::operator*(const Rational& c) const {
    CycleClass out(ring_, degree_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

CycleClass& CycleClass::operator+=(const Rational& c) {
    if (degree_ != 0) throw usage_error("constant added to positive-degree class");
    Monomial one(ring_->generators().size(), 0);
    Rational& acc = terms_[one];
    acc += c;
    if (acc == 0) terms_.erase(one);
    return *this;
}

bool CycleClass::operator==(const CycleClass& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

CycleClass ring_mul(const CycleClass& a, const CycleClass& b) { return a * b; }

Rational ring_integrate(const CycleClass& a) {
    if (!a.is_zero() && a.degree() != a.ring()->top_degree())
        throw usage_error("ring_integrate: class degree is not the top degree");
    Rational total(0);
    for (const auto& [m, c] : a.terms()) total += c * a.ring()->integral_of(m);
    return total;
}

Monomial make_monomial(const Ring& ring, const std::vector<std::pair<std::string, unsigned>>& exps) {
    Monomial m(ring->generators().size(), 0);
    for (const auto& [name, e] : exps) m[ring->generator_index(name)] += e;
    return m;
}

} // namespace posdiag
