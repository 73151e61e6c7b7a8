#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grmod/module.hpp"

namespace grmod {

// Flattening of per-degree matrices F_d into one coordinate vector; the
// blocks are the degrees where source and target are both nonzero.
struct FlatLayout {
    struct Block {
        int degree;
        int rows, cols;
        std::size_t offset;
    };
    std::vector<Block> blocks;
    std::size_t total = 0;

    static FlatLayout between(const GradedModule& X, const GradedModule& Y);
    std::vector<Scalar> flatten(const Field& f, const ModuleMap& m) const;
    ModuleMap unflatten(const GradedModule& X, const GradedModule& Y, const std::vector<Scalar>& v) const;
};

// Basis of Hom_A(X, Y)_0 with optional stable-quotient data (the subspace
// of maps factoring through a projective cover of Y).
struct HomSpace {
    std::vector<ModuleMap> basis;
    FlatLayout layout;
    Matrix flat_basis; // rows = flattened basis maps

    bool has_stable = false;
    Matrix factoring_coords;   // rref rows, coordinates in K^dim()
    SubspaceQuotient stable_q; // quotient of K^dim() by the factoring part

    std::size_t dim() const { return basis.size(); }
    std::size_t stable_dim() const { return has_stable ? stable_q.quotient_dim : basis.size(); }
    // Coordinates of an arbitrary hom in this basis; throws if not a hom.
    std::vector<Scalar> coords_of(const Field& f, const ModuleMap& m) const;
};

HomSpace hom0(const GradedModule& X, const GradedModule& Y);
HomSpace stable_hom0(const GradedModule& X, const GradedModule& Y);

// dim Hom_A(X, Y) (ungraded) computed directly via the forgetful functor.
std::size_t hom_dim_ungraded(const GradedModule& X, const GradedModule& Y);

// Lemma-level checks: the ungraded Hom decomposes as the sum of the graded
// Homs into all shifts, and the Z/aZ analogues (stable and non-stable).
bool verify_hom_decomposition(const GradedModule& X, const GradedModule& Y);
bool verify_cyclic_decomposition(const GradedModule& X, const GradedModule& Y, int a);
bool verify_cyclic_stable_decomposition(const GradedModule& X, const GradedModule& Y, int a);

// Endomorphism algebra of a summand list, with structure constants from
// composition of the chosen hom bases. For `stable`, morphisms factoring
// through projectives are quotiented out blockwise.
struct EndAlgebra {
    AlgebraPtr alg;
    std::vector<ModuleMap> rep;              // representative per algebra basis element
    std::vector<std::pair<int, int>> block;  // (source summand, target summand)
    std::vector<int> id_index;               // basis index of id_{M_s}
};

EndAlgebra end_algebra(const std::vector<GradedModule>& parts, bool stable, const std::string& name);

// Probabilistic isomorphism search: certified absence only on a structural
// obstruction (per-degree dimensions or an empty hom space).
struct IsoResult {
    enum class Status { Found, CertifiedAbsent, NotFound };
    Status status = Status::NotFound;
    std::optional<ModuleMap> iso;
    bool found() const { return status == Status::Found; }
};

IsoResult module_isomorphism(const GradedModule& X, const GradedModule& Y, std::uint64_t seed = 0);

// Searches `space` (given by flattened spanning vectors interpreted through
// `make`) for an element passing `good`: each basis vector first, then
// seeded small random combinations, then exhaustive enumeration over small
// prime fields.
std::optional<std::vector<Scalar>> search_combination(
    const Field& f, std::size_t n, std::uint64_t seed,
    const std::function<bool(const std::vector<Scalar>&)>& good);

} // namespace grmod
