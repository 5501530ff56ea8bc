#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "poisson/monomial.hpp"
#include "poisson/order.hpp"
#include "poisson/ring.hpp"

namespace poisson {

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: the term map never stores a zero coefficient, so equality is
// term-map equality. Values are immutable in spirit: every operation
// returns a fresh polynomial.
class Polynomial {
  public:
    static Polynomial zero(Ring r);
    static Polynomial constant(Ring r, Rational c);
    static Polynomial variable(Ring r, size_t i);
    static Polynomial variable(Ring r, std::string_view name);
    static Polynomial term(Ring r, Monomial m, Rational c);
    static Polynomial from_terms(Ring r, std::map<Monomial, Rational> terms);

    const Ring& ring() const { return ring_; }
    size_t nvars() const { return ring_->size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    int total_degree() const;         // requires !is_zero()
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& other) const;

    Polynomial partial(size_t var) const;
    Polynomial partial(std::string_view var) const;

    // Simultaneous substitution x_i -> images[i]; all images must share one
    // target ring. A ring homomorphism, exact.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    std::map<int, Polynomial> homogeneous_components() const;

    // Leading data under a term order; require a nonzero polynomial.
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    const Rational& leading_coefficient(const MonomialOrder& ord) const;
    Polynomial monic(const MonomialOrder& ord) const;

    // Deterministic printing: terms descending in grlex, coefficients in
    // lowest terms; output re-parses to the same polynomial.
    std::string str() const;

  private:
    Polynomial(Ring r, std::map<Monomial, Rational> terms)
        : ring_(std::move(r)), terms_(std::move(terms)) {}
    void prune();

    Ring ring_;
    std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Re-express p in `target`, matching variables by name. Every variable that
// actually occurs in p must exist in the target ring.
Polynomial lift_to(const Polynomial& p, const Ring& target);

void check_same_ring(const Polynomial& a, const Polynomial& b, const char* where);

}  // namespace poisson
