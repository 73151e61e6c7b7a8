#pragma once

#include <cstdint>
#include <vector>

#include "grmod/module.hpp"

namespace grmod {

// Minimal projective cover P -> X. Summands are listed as (idempotent
// ordinal, grade shift), so P = oplus e_u A(shift).
struct CoverData {
    GradedModule P;
    ModuleMap pi;
    std::vector<std::pair<int, int>> summands;
};

CoverData projective_cover(const GradedModule& X);

// Kernel of the minimal projective cover.
GradedModule syzygy(const GradedModule& X);

// Cosyzygy via duality over the opposite algebra; requires self-injective A.
GradedModule cosyzygy(const GradedModule& X);

bool is_projective(const GradedModule& X);

// Splits off every direct summand isomorphic to some e_u A(shift); the
// candidates are read off the graded top and processed by (idempotent,
// shift).
struct StripResult {
    GradedModule m;
    std::vector<std::pair<int, int>> removed; // (idempotent ordinal, shift)
};
StripResult strip_projectives(const GradedModule& X);

// Omega^{-n} with projective summands stripped after each step.
GradedModule stable_shift(const GradedModule& X, int n);

// Transpose: cokernel of the dualized minimal presentation, a module over
// the opposite algebra.
GradedModule transpose(const GradedModule& X);

// AR translations tau = D Tr and tau^{-1} = Tr D.
GradedModule tau(const GradedModule& X);
GradedModule tau_inverse(const GradedModule& X);

// Graded top of X as multiplicities: (idempotent ordinal, degree) -> count.
std::map<std::pair<int, int>, int> graded_top(const GradedModule& X);

} // namespace grmod
