#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "poisson/groebner.hpp"
#include "poisson/polynomial.hpp"
#include "poisson/skew_matrix.hpp"

namespace poisson {

struct Derivation;  // derivation.hpp

struct JacobiFailure {
    size_t i, j, k;        // generator triple
    Polynomial jacobiator;  // nonzero value of J(x_i, x_j, x_k)
};

// Thrown by constructors whose contract requires the Jacobi identity.
struct JacobiError : Error {
    JacobiError(const JacobiFailure& f, const std::string& msg) : Error(msg), failure(f) {}
    JacobiFailure failure;
};

// Polynomial ring (optionally modulo a Poisson ideal) together with the
// bracket table on generator pairs. The bracket of arbitrary elements is the
// unique biderivation extension of the table. Immutable once built.
class PoissonStructure {
  public:
    PoissonStructure(Ring ring, std::vector<Polynomial> upper_table,
                     std::optional<GroebnerBasis> relations, bool jacobi_verified);

    const Ring& ring() const { return ring_; }
    size_t nvars() const { return ring_->size(); }

    const Polynomial& table_entry(size_t i, size_t j) const;  // i < j
    Polynomial generator_bracket(size_t i, size_t j) const;   // signed; {x_i, x_j}

    bool has_relations() const { return relations_.has_value(); }
    const GroebnerBasis& relations() const { return *relations_; }
    bool jacobi_verified() const { return jacobi_verified_; }

    // Normal-form representative modulo the relations (identity if none).
    Polynomial reduce(const Polynomial& p) const;

    // { f, g } = sum_{i<j} L_ij (df/dx_i dg/dx_j - df/dx_j dg/dx_i), reduced.
    Polynomial bracket(const Polynomial& f, const Polynomial& g) const;

  private:
    size_t slot(size_t i, size_t j) const;

    Ring ring_;
    std::vector<Polynomial> table_;  // strict upper triangle, row-major
    std::optional<GroebnerBasis> relations_;
    bool jacobi_verified_;
};

// Vanishing of the Jacobiator on all generator triples, modulo relations.
// Passing certifies the Jacobi identity on the whole algebra: the Jacobiator
// of a biderivation bracket is a derivation in each of its three slots.
std::optional<JacobiFailure> jacobi_check(const PoissonStructure& P);

// --- constructors ---------------------------------------------------------

PoissonStructure trivial_structure(Ring r);

// Table entries for i < j; unlisted pairs are zero. Runs jacobi_check and
// records the outcome without failing.
PoissonStructure from_table(Ring r,
                            const std::vector<std::tuple<size_t, size_t, Polynomial>>& entries);

// Jacobian bracket on three variables: {x,y} = f_z, {y,z} = f_x, {z,x} = f_y.
PoissonStructure from_potential(const Polynomial& f);

// {x_i, x_j} = lambda_ij x_i x_j.
PoissonStructure skew_quadratic(const SkewMatrix& lambda, Ring r = nullptr);

// Q[x1..xn, y1..yn] with {x_i, y_j} = delta_ij (names x, y when n == 1).
PoissonStructure symplectic(size_t n);

// Kirillov-Kostant bracket from linear table entries {x_i, x_j} = sum c_ij^k x_k.
// Throws JacobiError (with witness) when the constants violate the Lie
// Jacobi identity.
PoissonStructure linear_from_lie(
    Ring r, const std::vector<std::tuple<size_t, size_t, Polynomial>>& linear_entries);

// Joint structure on the disjoint union of variables; cross brackets vanish.
// Colliding names on the right factor are renamed (x -> x2, x3, ...).
PoissonStructure tensor(const PoissonStructure& A, const PoissonStructure& B);

// Poisson-Ore extension A[z; alpha, delta]_P with {z, a} = alpha(a) z + delta(a).
// alpha must be a Poisson derivation and delta a Poisson alpha-derivation;
// both laws are checked on generator pairs.
PoissonStructure ore_extend(const PoissonStructure& P, const Derivation& alpha,
                            const Derivation& delta, const std::string& z_name);

// --- Poisson ideals -------------------------------------------------------

struct PoissonIdealCheck {
    bool ok = false;
    // witness on failure: {generators[gen], x_var} has nonzero residue
    size_t gen = 0, var = 0;
    std::optional<Polynomial> residue;
};

PoissonIdealCheck is_poisson_ideal(const PoissonStructure& P, const std::vector<Polynomial>& gens);

struct PoissonIdeal {
    std::vector<Polynomial> generators;
    GroebnerBasis gb;
};

// Validates {I, A} subset I; throws with the witness pair otherwise.
PoissonIdeal make_poisson_ideal(const PoissonStructure& P, std::vector<Polynomial> gens);

PoissonStructure quotient(const PoissonStructure& P, const PoissonIdeal& I);

// Vanishing ideal of the bracket table joined with the relations. Its
// rational points are exactly the maximal ideals that are Poisson ideals.
GroebnerBasis poisson_points(const PoissonStructure& P);

}  // namespace poisson
