#pragma once

#include <optional>
#include <vector>

#include "poisson/polynomial.hpp"
#include "poisson/skew_matrix.hpp"

namespace poisson {

// Permutation sigma with lambda_ij = lambda'_{sigma(i) sigma(j)} for all i, j
// (signs fall out of the index order), or nullopt. Backtracking search,
// pruned by matching each row's entry multiset; deterministic: candidate
// rows are tried lowest index first.
std::optional<std::vector<size_t>> find_permutation(const SkewMatrix& lambda,
                                                    const SkewMatrix& lambda_prime);

struct IsoDecision {
    bool isomorphic = false;
    std::optional<std::vector<size_t>> sigma;
    // All-nonzero hypothesis on the source matrix;
    // when it fails the matrix answer is advisory, not a classification.
    bool hypothesis_holds = false;
    bool map_verified = false;  // relabeling passed the Poisson-map check
};

// Skew quadratic isomorphism classifier: matches coefficient matrices up to
// a permutation and verifies the induced generator relabeling preserves
// brackets.
IsoDecision iso_decision(const SkewMatrix& lambda, const SkewMatrix& lambda_prime);

// Degree-one principal Poisson-ideal criterion: (f) is a Poisson ideal of
// the skew quadratic structure iff f is a scalar multiple of one variable.
// The ideal-theoretic and syntactic answers must agree under the all-nonzero
// hypothesis; disagreement is a hard internal error.
bool degree_one_principal_poisson(const SkewMatrix& lambda, const Polynomial& f);

}  // namespace poisson
