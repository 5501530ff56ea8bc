#include "poisson/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace poisson {

void check_same_ring(const Polynomial& a, const Polynomial& b, const char* where) {
    if (!same_ring(a.ring(), b.ring()))
        throw Error(std::string(where) + ": polynomials live in different rings");
}

Polynomial Polynomial::zero(Ring r) { return Polynomial(std::move(r), {}); }

Polynomial Polynomial::constant(Ring r, Rational c) {
    std::map<Monomial, Rational> t;
    if (c != 0) t.emplace(Monomial::one(r->size()), std::move(c));
    return Polynomial(std::move(r), std::move(t));
}

Polynomial Polynomial::variable(Ring r, size_t i) {
    if (i >= r->size()) throw Error("variable: index out of range");
    std::map<Monomial, Rational> t;
    t.emplace(Monomial::var(r->size(), i), Rational(1));
    return Polynomial(std::move(r), std::move(t));
}

Polynomial Polynomial::variable(Ring r, std::string_view name) {
    auto idx = r->index_of(name);
    if (!idx) throw Error("variable: unknown variable '" + std::string(name) + "'");
    return variable(std::move(r), *idx);
}

Polynomial Polynomial::term(Ring r, Monomial m, Rational c) {
    if (m.nvars() != r->size()) throw Error("term: monomial width does not match ring");
    std::map<Monomial, Rational> t;
    if (c != 0) t.emplace(std::move(m), std::move(c));
    return Polynomial(std::move(r), std::move(t));
}

Polynomial Polynomial::from_terms(Ring r, std::map<Monomial, Rational> terms) {
    for (const auto& [m, c] : terms)
        if (m.nvars() != r->size()) throw Error("from_terms: monomial width does not match ring");
    Polynomial p(std::move(r), std::move(terms));
    p.prune();
    return p;
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (is_zero()) throw Error("total_degree: undefined for the zero polynomial");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_ring(*this, other, "add");
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_ring(*this, other, "sub");
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b, "mul");
    std::map<Monomial, Rational> t;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            auto [it, inserted] = t.emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    Polynomial p(a.ring_, std::move(t));
    p.prune();
    return p;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial::zero(p.ring());
    Polynomial q = p;
    for (auto& [m, coeff] : q.terms_) coeff *= c;
    return q;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, Rational(1));
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial Polynomial::partial(size_t var) const {
    if (var >= nvars()) throw Error("partial: variable index out of range");
    std::map<Monomial, Rational> t;
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exponents[var] = e - 1;
        t.emplace(std::move(dm), c * e);
    }
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::partial(std::string_view var) const {
    auto idx = ring_->index_of(var);
    if (!idx) throw Error("partial: unknown variable '" + std::string(var) + "'");
    return partial(*idx);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars())
        throw Error("substitute: need exactly one image per ring variable");
    if (images.empty()) throw Error("substitute: empty ring");
    const Ring& target = images.front().ring();
    for (const auto& img : images)
        if (!same_ring(img.ring(), target))
            throw Error("substitute: images do not share a target ring");

    // Cache the powers of each image up to the largest exponent used.
    std::vector<int> max_exp(nvars(), 0);
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < nvars(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
    std::vector<std::vector<Polynomial>> powers(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
        powers[i].push_back(Polynomial::constant(target, Rational(1)));
        for (int e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * images[i]);
    }

    Polynomial result = Polynomial::zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (size_t i = 0; i < nvars(); ++i)
            if (m[i] > 0) t = t * powers[i][m[i]];
        result += t;
    }
    return result;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
    std::map<int, Polynomial> comps;
    for (const auto& [m, c] : terms_) {
        int d = m.degree();
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, Polynomial::zero(ring_)).first;
        it->second += Polynomial::term(ring_, m, c);
    }
    return comps;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& ord) const {
    if (is_zero()) throw Error("leading_monomial: zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (ord.greater(m, *best)) best = &m;
    return *best;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& ord) const {
    return terms_.at(leading_monomial(ord));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    Rational lc = leading_coefficient(ord);
    return Rational(1 / lc) * *this;
}

namespace {

void render_monomial(std::ostream& os, const Monomial& m, const VariableContext& ring) {
    bool first = true;
    for (size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        os << ring.name(i);
        if (m[i] > 1) os << '^' << m[i];
        first = false;
    }
}

}  // namespace

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
        return grlex_compare(a->first, b->first) == std::strong_ordering::greater;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << '*';
            render_monomial(os, m, *ring_);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial lift_to(const Polynomial& p, const Ring& target) {
    if (same_ring(p.ring(), target)) return p;
    std::vector<int> slot(p.nvars(), -1);
    std::map<Monomial, Rational> terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial lifted = Monomial::one(target->size());
        for (size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (slot[i] < 0) {
                auto idx = target->index_of(p.ring()->name(i));
                if (!idx)
                    throw Error("lift_to: variable '" + p.ring()->name(i) +
                                "' is absent from the target ring");
                slot[i] = static_cast<int>(*idx);
            }
            lifted.exponents[slot[i]] = m[i];
        }
        terms.emplace(std::move(lifted), c);
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace poisson
