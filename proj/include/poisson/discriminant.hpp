#pragma once

#include <optional>
#include <string>

#include "poisson/bracket.hpp"

namespace poisson {

// Discriminant of a Poisson structure over a designated central element g,
// for the property "the fiber A/(g - lambda) has no Poisson rational point".
// The critical values are the roots of the squarefree critical polynomial
// p(w); d = p(g). d == 1 signals the empty discriminant set.
struct DiscriminantReport {
    Polynomial central_element;      // g, in the structure's ring
    Polynomial critical_polynomial;  // squarefree monic p(w), in Q[w]
    Polynomial discriminant;         // d = p(g), in the structure's ring
    std::string locus_note;          // classification of the Poisson-point set
};

// Eliminates the ring variables from (bracket table) + relations + (w - g).
// Throws when g is not central or when the critical-value set has positive
// dimension (zero elimination ideal).
DiscriminantReport discriminant_poisson_points(const PoissonStructure& P, const Polynomial& g);

struct SingularLocusReport {
    GroebnerBasis jacobian_ideal;
    bool isolated = false;
    std::optional<std::uint64_t> milnor_dimension;  // quotient dimension when isolated
};


// Jacobian ideal (f_x, f_y, f_z) of a potential in three variables.
SingularLocusReport singular_locus(const Polynomial& f);

enum class Effectiveness { EffectiveCertified, Unknown };
enum class RingKind { Univariate, Multivariate };

// Sufficient criteria only: any nonzero univariate element, or a nonzero
// dominating monomial with all-positive exponents above component-wise
// smaller terms. Unknown never means "not effective".
Effectiveness effectiveness_certificate(const Polynomial& d, RingKind kind);

// Monic squarefree part of a univariate polynomial (p / gcd(p, p')).
Polynomial squarefree_part_univariate(const Polynomial& p);

}  // namespace poisson
