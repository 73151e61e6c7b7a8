#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "grmod/algebra.hpp"

namespace grmod {

struct Arrow {
    std::string name;
    int from = 0; // vertex ordinals
    int to = 0;
    int degree = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    void validate() const;
};

// One relation: a K-linear combination of parallel paths of equal degree.
// Paths are arrow-index lists composing left to right ([a, b] = a then b).
struct RelationTerm {
    Scalar coeff;
    std::vector<int> path;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

// Span of paths of length <= max_path_length modulo the two-sided ideal
// generated by the relations, block by (source, target, degree). Throws
// NonNilpotent when paths of the maximal length are not all in the ideal.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels, const Field& field,
                         int max_path_length, const std::string& name = "");

// Path algebra of an acyclic quiver (cap = number of vertices).
AlgebraPtr path_algebra(const Quiver& q, const Field& field, const std::string& name = "");

// Classical preprojective algebra of the double quiver, deg alpha = 0,
// deg alpha* = 1, relations sum_eps alpha alpha*. `flip_signs` swaps the
// sign convention (an isomorphic presentation).
AlgebraPtr preprojective_algebra(const Quiver& q, const Field& field, int cap = 0,
                                 bool flip_signs = false, const std::string& name = "");

// Trivial extension Lambda + D(Lambda) with D(Lambda) in degree 1.
AlgebraPtr trivial_extension(const GradedAlgebra& lambda, const std::string& name = "");

// The upper-triangular block algebra with (i,j) block A_{j-i}, 0 <= i <= j < l.
AlgebraPtr beilinson_algebra(const GradedAlgebra& A, int l, const std::string& name = "");

// Basis slot order (block row, block col, algebra element) used by
// beilinson_algebra.
std::vector<std::tuple<int, int, int>> beilinson_slots(const GradedAlgebra& A, int l);

// Linear A_n quiver 1 -> 2 -> ... -> n with degree-0 arrows.
Quiver linear_quiver(int n);

// Nakayama data: cyclic quiver on `vertices` vertices with arrow degree 1
// and relations killing all paths of length `nilpotency`.
AlgebraPtr nakayama_algebra(int vertices, int nilpotency, const Field& field,
                            const std::string& name = "");

// K[x_1..x_n]/(x_i^2), deg x_i = 1 (one vertex, n loops, commuting squares
// zero).
AlgebraPtr exterior_style_algebra(int n, const Field& field, const std::string& name = "");

} // namespace grmod
