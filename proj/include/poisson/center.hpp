#pragma once

#include <vector>

#include "poisson/bracket.hpp"

namespace poisson {

// Degree-truncated slice of the Poisson center. The basis spans exactly
// { z : deg z <= complete_up_to, {z, x_i} = 0 for all generators }; nothing
// is claimed beyond that degree.
struct CenterReport {
    int max_degree = 0;
    std::vector<Polynomial> basis;  // echelonized, sorted by degree then grlex
    int complete_up_to = 0;
};

// Null space of z -> ({z, x_1}, ..., {z, x_n}) on the coefficient space of
// degree <= dmax elements. Generator conditions suffice because {z, -} is a
// derivation. Homogeneous tables are solved degree by degree.
CenterReport center_basis(const PoissonStructure& P, int dmax);

bool is_central(const PoissonStructure& P, const Polynomial& z);

}  // namespace poisson
