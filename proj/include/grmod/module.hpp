#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grmod/algebra.hpp"

namespace grmod {

// Finitely generated graded right module: a dimension per degree and, for
// every algebra basis element, the per-degree action matrices. Elements of
// X_d are row vectors; the action of b maps X_d -> X_{d + deg b} as
// x -> x * act[b][d].
//
// `mod` = 0 means Z-graded; mod = a > 0 means Z/aZ-graded with degrees
// normalized to [0, a).
struct GradedModule {
    const GradedAlgebra* A = nullptr;
    int mod = 0;
    std::map<int, int> dims;                 // only nonzero entries
    std::vector<std::map<int, Matrix>> act;  // [basis index][degree]

    int wrap(int d) const { return mod > 0 ? ((d % mod) + mod) % mod : d; }
    int dim_at(int d) const;
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    int min_degree() const; // throws on the zero module
    int max_degree() const;

    // Action matrix of basis element b from degree d (zero-filled fallback).
    Matrix action(int b, int d) const;
    // Action of a general algebra element from degree d.
    Matrix elem_action(const Elem& x, int d) const;

    bool same_presentation(const GradedModule& o) const;
};

GradedModule zero_module(const GradedAlgebra& A, int mod = 0);

// Degree-preserving homomorphism of graded modules, stored as per-degree
// matrices F_d : X_d -> Y_d (x -> x * F_d).
struct ModuleMap {
    const GradedAlgebra* A = nullptr;
    int mod = 0;
    std::map<int, int> src_dims, tgt_dims;
    std::map<int, Matrix> comp; // degrees where both sides are nonzero

    Matrix at(int d) const; // zero-filled fallback
    bool is_zero() const;
    // Bijective in every degree (equal dims everywhere and each block
    // invertible).
    bool is_iso() const;

    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap scaled(const Scalar& c) const;
};

ModuleMap identity_map(const GradedModule& X);
ModuleMap zero_map(const GradedModule& X, const GradedModule& Y);
// Apply f first, then g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
std::optional<ModuleMap> invert(const ModuleMap& f);
// Checks A-linearity of the given per-degree matrices (test helper).
bool is_module_map(const GradedModule& X, const GradedModule& Y, const ModuleMap& f);

// e_u A(shift) (or the full A(shift) when u is absent), optionally cut to
// module degrees in [lo, hi]. Row slots are the algebra basis elements with
// src = u, ordered by basis index; keeping the window is valid because the
// grading is non-negative, so the part above `hi` is a submodule and the
// part below `lo` is spanned by the missing generators.
struct SlotModule {
    GradedModule m;
    std::map<int, std::vector<int>> slots; // degree -> algebra basis indices
};

SlotModule window_module(const GradedAlgebra& A, std::optional<int> u, int shift,
                         std::optional<int> lo, std::optional<int> hi, int mod = 0);

GradedModule indecomposable_projective(const GradedAlgebra& A, int u, int shift, int mod = 0);
GradedModule simple_module(const GradedAlgebra& A, int u, int shift, int mod = 0);
GradedModule regular_module(const GradedAlgebra& A, int mod = 0);

// Direct sums with summand bookkeeping.
struct DirectSum {
    GradedModule m;
    std::vector<std::map<int, int>> offsets; // per summand: degree -> first row
    std::vector<std::map<int, int>> widths;  // per summand: degree -> rows

    ModuleMap inclusion(const std::vector<GradedModule>& parts, std::size_t s) const;
    ModuleMap projection(const std::vector<GradedModule>& parts, std::size_t s) const;
};

DirectSum direct_sum(const GradedAlgebra& A, const std::vector<GradedModule>& parts, int mod = 0);

// Submodule spanned by the given rows (per degree); returns the module and
// the inclusion. Throws if the span is not closed under the action.
struct SubmoduleResult {
    GradedModule m;
    ModuleMap inclusion;
};
SubmoduleResult submodule(const GradedModule& X, const std::map<int, std::vector<std::vector<Scalar>>>& rows);

// Quotient by the submodule spanned by the given rows; returns the module
// and the projection.
struct QuotientResult {
    GradedModule m;
    ModuleMap projection;
};
QuotientResult quotient(const GradedModule& X, const std::map<int, std::vector<std::vector<Scalar>>>& rows);

GradedModule shift_module(const GradedModule& X, int i);
// X_{>= i} as a submodule (Z-graded only).
SubmoduleResult truncate_below(const GradedModule& X, int i);
// X_{<= i} = X / X_{>= i+1} (Z-graded only).
QuotientResult truncate_above(const GradedModule& X, int i);

// K-dual over the opposite algebra, (DX)_i = D(X_{-i}).
GradedModule dual_module(const GradedModule& X);

// The canonical evaluation isomorphism X -> D(D(X)) (test helper).
ModuleMap double_dual_iso(const GradedModule& X);

// Regrade a Z-graded module over Z/aZ.
GradedModule forget_to_cyclic(const GradedModule& X, int a);

// Verifies 0 -> X_{>= i+1} -> X -> X_{<= i} -> 0 at the level of maps.
bool verify_truncation_exact(const GradedModule& X, int i);

} // namespace grmod
