#pragma once

#include <cstdint>

#include "grmod/hom.hpp"

namespace grmod {

// End(X)_0 is local: its radical has codimension 1. Throws SplitnessWarning
// when End/rad is a division algebra of dimension > 1 over the field.
bool is_indecomposable(const GradedModule& X, std::uint64_t seed = 0);

struct Decomposition {
    std::vector<GradedModule> factors;   // pairwise non-isomorphic
    std::vector<int> multiplicities;
    std::vector<GradedModule> pieces;    // all indecomposable pieces, unsorted
};

// Krull-Schmidt decomposition by splitting idempotents of End(X)_0 lifted
// from End/rad (Newton iteration e <- 3e^2 - 2e^3).
Decomposition decompose(const GradedModule& X, std::uint64_t seed = 0);

// Radical of End(X)_0 as flat coordinate vectors over the hom basis.
std::vector<std::vector<Scalar>> end_radical(const GradedModule& X, const HomSpace& H);

} // namespace grmod
