#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "poisson/polynomial.hpp"

namespace poisson {

// Reduced Groebner basis: generators are monic, no term of any generator is
// divisible by another generator's leading term, and they are sorted with
// the largest leading monomial first. Reduced bases are canonical for a
// fixed order, so equality of ideals is equality of bases.
struct GroebnerBasis {
    Ring ring;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> generators;

    bool is_zero_ideal() const { return generators.empty(); }
    bool is_unit_ideal() const {
        return generators.size() == 1 && generators.front().is_constant();
    }
};

GroebnerBasis buchberger(std::vector<Polynomial> gens,
                         MonomialOrder order = MonomialOrder::degrevlex());

// Remainder of p on division by gb: no term of the result is divisible by
// any leading term of gb. normal_form(p) == 0 iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Generators of the elimination ideal in the kept variables. `keep` must be
// a proper subset of the ring's variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<std::string>& keep);

// True iff every variable has a pure power among the leading terms (the
// quotient is a finite-dimensional vector space). The unit ideal counts.
bool is_zero_dimensional(const GroebnerBasis& gb);

// Number of standard monomials; requires is_zero_dimensional.
std::uint64_t quotient_dimension(const GroebnerBasis& gb);

// Monomials of degree <= dmax outside the leading-term ideal, ascending in
// grlex. With an empty basis this is every monomial of degree <= dmax.
std::vector<Monomial> standard_monomials_up_to(const GroebnerBasis& gb, int dmax);

}  // namespace poisson
