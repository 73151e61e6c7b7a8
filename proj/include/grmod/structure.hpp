#pragma once

#include <cstdint>
#include <optional>

#include "grmod/algebra.hpp"
#include "grmod/module.hpp"

namespace grmod {

// e_i A = D(A e_sigma(i)) as ungraded right modules for a permutation sigma.
struct SelfInjectivity {
    bool self_injective = false;
    std::vector<int> nakayama;
};
SelfInjectivity is_self_injective(const GradedAlgebra& A);

// A = DA as bimodules, decided through the space of symmetrizing forms
// (linear functionals beta with beta(xy) = beta(yx)) searched for a
// nondegenerate one.
bool is_symmetric(const GradedAlgebra& A, std::uint64_t seed = 0);

// A symmetrizing form supported in a single degree l (so beta pairs A_i
// with A_{l-i}); nullopt when no nondegenerate one is found.
std::optional<std::vector<Scalar>> graded_symmetrizing_form(const GradedAlgebra& A, int l,
                                                            std::uint64_t seed = 0);

// The degree containing the socle, when it is a single one.
std::optional<int> gorenstein_parameter(const GradedAlgebra& A);

struct GlobalDim {
    bool finite = true;
    int value = 0; // the dimension, or the cap when !finite
};
GlobalDim global_dimension(const GradedAlgebra& A, int cap = 32);

} // namespace grmod
