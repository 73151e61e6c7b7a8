#pragma once

#include <cstdint>
#include <optional>

#include "grmod/algebra.hpp"

namespace grmod {

// Degree-preserving unital algebra isomorphism search. Absence is certified
// only on structural mismatches (dimensions per degree, idempotent count,
// Gabriel quiver); otherwise a failed search reports NotFound.
struct AlgebraIsoResult {
    enum class Status { Found, CertifiedAbsent, NotFound };
    Status status = Status::NotFound;
    std::optional<Matrix> map; // row convention: coords_B(F(x)) = coords_A(x) * map
    bool found() const { return status == Status::Found; }
};

AlgebraIsoResult algebra_isomorphism(const GradedAlgebra& A, const GradedAlgebra& B,
                                     std::uint64_t seed = 0);

// Gabriel quiver data of a split basic algebra: arrow multiplicities
// (source vertex, target vertex, degree) -> dim e_u (J/J^2) e_v.
std::map<std::tuple<int, int, int>, int> gabriel_arrows(const GradedAlgebra& A);

} // namespace grmod
