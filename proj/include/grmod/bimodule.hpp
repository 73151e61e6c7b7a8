#pragma once

#include <cstdint>

#include "grmod/module.hpp"
#include "grmod/quiver.hpp"

namespace grmod {

// Block (Gamma, A)-bimodule: a staircase of shifted/truncated copies of A
// with the Beilinson algebra acting on the left by block multiplication and
// A acting on the right. Summand r carries the slots of A(base - r).
struct BlockBimodule {
    const GradedAlgebra* A = nullptr;
    AlgebraPtr gamma; // Beilinson block algebra
    std::vector<std::tuple<int, int, int>> gamma_slots; // (row, col, elem) per gamma basis index
    std::vector<SlotModule> rows;
    DirectSum sum; // underlying right A-module
    std::vector<std::map<int, Matrix>> left_act; // per gamma basis index, per degree

    int total_dim() const { return sum.m.total_dim(); }
    // left action matrix at a degree (zero-filled fallback)
    Matrix left_at(std::size_t g, int d) const;
};

// M = oplus_{i=l}^{2l-1} A(i)_{>= 1-l}; requires Gorenstein parameter l >= 1.
BlockBimodule build_M(const GradedAlgebra& A);

// Left/right action axioms and their commutativity, on all basis triples.
bool verify_bimodule_axioms(const BlockBimodule& M);

// 0 -> M -> oplus_{i=l}^{2l-1} A(i) -> T-bar(l) -> 0, exact degreewise with
// Gamma-equivariant maps.
bool verify_M_syzygy_sequence(const GradedAlgebra& A);

// Matrix multiplication M (x)_Gamma T-bar -> M is an isomorphism of graded
// (Gamma, A)-bimodules (tensor graded by the T-bar degree).
bool verify_M_tensor_T(const GradedAlgebra& A);

// For symmetric A: the blockwise symmetrizing map M -> D(Gamma) is an
// isomorphism of Gamma-bimodules. Throws NotSymmetric when no graded
// symmetrizing form exists.
bool verify_M_is_dual_gamma(const GradedAlgebra& A, std::uint64_t seed = 0);

} // namespace grmod
