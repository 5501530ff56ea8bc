#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poisson/bracket.hpp"
#include "poisson/polynomial.hpp"

namespace poisson {

// Derivation of a polynomial ring given by its generator images; it extends
// to everything by the Leibniz rule.
struct Derivation {
    Ring ring;
    std::vector<Polynomial> images;  // images[i] = delta(x_i)

    static Derivation zero(Ring r);
    static Derivation partial(Ring r, size_t i);  // d/dx_i
    static Derivation make(Ring r, std::vector<Polynomial> images);

    bool is_zero() const;
    std::string str() const;
};

// delta(p) = sum_i delta(x_i) dp/dx_i.
Polynomial apply(const Derivation& d, const Polynomial& p);
// Same, reduced modulo the structure's relations.
Polynomial apply(const PoissonStructure& P, const Derivation& d, const Polynomial& p);

struct DerivationLawWitness {
    size_t i, j;
    Polynomial lhs, rhs;  // delta({x_i,x_j}) vs {delta x_i, x_j} + {x_i, delta x_j}
};

// Checks the Poisson-derivation law on all generator pairs (sufficient: both
// sides extend to biderivations) and, on quotient carriers, that delta maps
// the relation ideal into itself.
std::optional<DerivationLawWitness> poisson_derivation_witness(const PoissonStructure& P,
                                                               const Derivation& d);
bool is_poisson_derivation(const PoissonStructure& P, const Derivation& d);

// --- local nilpotency -----------------------------------------------------

enum class NilpotencyKind { NilpotentCertified, NotNilpotentCertified, Unknown };

struct NilpotencyStatus {
    NilpotencyKind kind = NilpotencyKind::Unknown;
    // NilpotentCertified: smallest k with delta^k(x_i) = 0 for every i.
    int order = 0;
    // NotNilpotentCertified: delta^to(x_var) = scalar * delta^from(x_var).
    size_t witness_var = 0;
    int cycle_from = 0, cycle_to = 0;
    Rational cycle_scalar;
};

// Iterates delta on each generator up to `bound` steps. Nilpotency on the
// generators certifies local nilpotency on the whole ring (char 0, Leibniz).
// An eigen-cycle among the iterates certifies the opposite; anything else is
// Unknown.
NilpotencyStatus lnd_status(const PoissonStructure& P, const Derivation& d, int bound);
NilpotencyStatus lnd_status(const Derivation& d, int bound);  // plain polynomial ring

// --- higher (Hasse-Schmidt) derivations ------------------------------------

// Sequence (d_0 = id, d_1, d_2, ...) described by generator images; values on
// products come from the convolution rule d_n(ab) = sum d_i(a) d_{n-i}(b),
// so only finitely many generator images are stored.
struct HigherDerivation {
    Ring ring;
    // images[i][k] = d_{k+1}(x_i); trailing zeros trimmed.
    std::vector<std::vector<Polynomial>> images;
    bool iterative = false;

    Polynomial image(size_t var, int n) const;  // d_n(x_var), n >= 1
    int max_index() const;
    std::string str() const;
};

// d_n(p) for n >= 0, extended over monomials by the convolution rule.
Polynomial apply(const HigherDerivation& hd, int n, const Polynomial& p);
Polynomial apply(const PoissonStructure& P, const HigherDerivation& hd, int n,
                 const Polynomial& p);

// (delta^i / i!) from a certified locally nilpotent derivation; iterative.
HigherDerivation higher_from_iterative(const PoissonStructure& P, const Derivation& d, int bound);

struct HigherLawWitness {
    int n;
    size_t i, j;
    Polynomial lhs, rhs;
};

// d_n({a,b}) = sum_{i<=n} {d_i(a), d_{n-i}(b)} on generator pairs, n <= nmax.
std::optional<HigherLawWitness> higher_poisson_witness(const PoissonStructure& P,
                                                       const HigherDerivation& hd, int nmax);
bool is_higher_poisson(const PoissonStructure& P, const HigherDerivation& hd, int nmax);

// Binomial higher derivation in the central variable t: d_m sends t^p to
// C(p, m) t^(p-m) and fixes the other variables.
HigherDerivation dt_higher_derivation(const PoissonStructure& P, size_t t_index);

// --- exponential automorphisms --------------------------------------------

// Substitution map between polynomial rings.
struct RingMap {
    Ring source, target;
    std::vector<Polynomial> images;  // one per source variable, in target

    std::string str() const;
};

Polynomial apply(const RingMap& f, const Polynomial& p);
// x -> second(first(x)); both maps must be endomorphisms of one ring.
RingMap compose(const RingMap& second, const RingMap& first);
RingMap identity_map(Ring r);

// G_{c d}: x -> sum_k c^k d_k(x) on the structure's ring.
RingMap automorphism_specialize(const HigherDerivation& hd, const Rational& c);
// G_{d,t}: x -> sum_k d_k(x) t^k and t -> t on ring + [t]. With
// negative_parameter the series is taken at -t (the inverse map).
RingMap automorphism_formal(const HigherDerivation& hd, const std::string& t_name,
                            bool negative_parameter = false);

struct MapWitness {
    size_t i, j;
    Polynomial lhs, rhs;  // phi({x_i,x_j}) vs {phi x_i, phi x_j}
};

// Bracket preservation on generator pairs; well-definedness on relation
// generators is an error, not a witness.
std::optional<MapWitness> poisson_map_witness(const PoissonStructure& P,
                                              const PoissonStructure& Q, const RingMap& phi);
bool is_poisson_map(const PoissonStructure& P, const PoissonStructure& Q, const RingMap& phi);

// --- searches ---------------------------------------------------------------

struct LndSearchResult {
    std::vector<Derivation> certified;  // Poisson derivations certified nilpotent
    size_t pder_dimension = 0;          // exact dimension of the solution space
    size_t candidates_tested = 0;
};

// Solves the Poisson-derivation law exactly over image tuples of degree <=
// image_degree_bound, then filters basis vectors and simple +/- combinations
// of up to `combination_breadth` of them through lnd_status. Heuristic on
// the nilpotent side only: the solution space itself is exact.
LndSearchResult find_poisson_lnds(const PoissonStructure& P, int image_degree_bound,
                                  int nilpotency_bound, int combination_breadth = 2);

// --- Makar-Limanov kernels --------------------------------------------------

using FamilyMember = std::variant<Derivation, HigherDerivation>;

struct MLReport {
    int dmax = 0;
    std::vector<FamilyMember> family;  // retained members
    std::vector<std::string> notices;
    std::vector<Polynomial> kernel_basis;
};

// Basis of { p : deg p <= dmax, annihilated by every retained family member }.
// Members must be certified Poisson + locally nilpotent. With relative_d,
// members that move d are dropped with a notice instead of used.
MLReport ml_kernel(const PoissonStructure& P, const std::vector<FamilyMember>& family, int dmax,
                   const std::optional<Polynomial>& relative_d = std::nullopt,
                   int nilpotency_bound = 32);

}  // namespace poisson
