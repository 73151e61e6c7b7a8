#pragma once

#include <cstdint>
#include <string>

#include "grmod/algiso.hpp"
#include "grmod/cover.hpp"
#include "grmod/decompose.hpp"
#include "grmod/hom.hpp"
#include "grmod/quiver.hpp"
#include "grmod/structure.hpp"

namespace grmod {

// The tilting object T = oplus_{i>=0} A(i)_{<=0}, truncated at the first
// index where the summand is projective, its non-projective part, and the
// endomorphism algebra Gamma = End(T-bar)_0.
struct TiltingData {
    const GradedAlgebra* A = nullptr;
    int cutoff = 0;                      // first i with A(i)_{<=0} projective
    std::vector<GradedModule> summands;  // A(i)_{<=0}, i = 0..cutoff
    std::vector<GradedModule> stripped;  // indecomposable non-projective summands
    bool has_gamma = false;
    EndAlgebra gamma_end;
};

TiltingData build_T(const GradedAlgebra& A);
void strip_T(TiltingData& t, std::uint64_t seed = 0);
void compute_gamma(TiltingData& t, std::uint64_t seed = 0);
TiltingData tilting_pipeline(const GradedAlgebra& A, std::uint64_t seed = 0);

// Lemma-level check: Hom(T, T[i])_0 = 0 in the stable category for
// 1 <= |i| <= range.
bool verify_no_self_ext(const TiltingData& t, int range = 6);
bool verify_no_self_ext_of(const GradedAlgebra& A, const std::vector<GradedModule>& summands, int range);

// End_A(U)_0 for U = oplus_{i<l} A(i)_{<=0} equals the Beilinson block
// algebra via the constructive identification Hom(A(i)_{<=0}, A(j)_{<=0})_0
// = A_{j-i}, and its non-projective corner is Gamma.
struct BeilinsonCheck {
    bool dims_match = false;      // hom dimensions equal the block dimensions
    bool explicit_iso = false;    // the constructed block map is an algebra isomorphism
    bool corner_is_gamma = false; // Gamma matches the non-projective corner
    bool gamma_is_full = false;   // no summand of U is projective
    bool ok() const { return dims_match && explicit_iso && corner_is_gamma; }
};
BeilinsonCheck verify_gamma_is_beilinson(const GradedAlgebra& A, std::uint64_t seed = 0);

// Theorem-level check: finite gl.dim of A_0 forces finite gl.dim of Gamma.
struct GammaFindim {
    GlobalDim a0, gamma;
    bool ok() const { return !a0.finite || gamma.finite; }
};
GammaFindim verify_gamma_findim(const GradedAlgebra& A, int cap = 32, std::uint64_t seed = 0);

// Degree-0 part of a positively graded algebra, as an algebra.
AlgebraPtr degree_zero_part(const GradedAlgebra& A);

// Stable endomorphism algebra of an ungraded module (all degrees 0);
// projective pieces are dropped, multiplicities kept.
EndAlgebra ungraded_stable_end(const GradedAlgebra& lambda, const GradedModule& X,
                               std::uint64_t seed = 0);

// Preprojective identities for a Dynkin quiver: Pi_i = tau^{-i}(Lambda),
// End_Pi(T-bar)_0 = stable End_Lambda(Pi), Pi self-injective.
struct PreprojectiveReport {
    bool graded_pieces_match = false; // Pi_i = tau^{-i}(Lambda) for all i
    int top_degree = 0;
    int dim_pi = 0;
    bool end_iso = false;
    bool self_injective = false;
    bool ok() const { return graded_pieces_match && end_iso && self_injective; }
};
PreprojectiveReport verify_preprojective_identities(const Quiver& q, const Field& field,
                                                    std::uint64_t seed = 0);

} // namespace grmod
