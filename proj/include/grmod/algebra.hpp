#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "grmod/matrix.hpp"

namespace grmod {

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// One structure-constant term: b_i * b_j = sum of coeff * b_k.
using ProductTerms = std::vector<std::pair<int, Scalar>>;

struct BasisElem {
    std::string label;
    int degree = 0;
    int src = 0; // ordinal of the idempotent e with e*b = b
    int tgt = 0; // ordinal of the idempotent e with b*e = b
};

// Element of an algebra = coefficient vector over its basis.
using Elem = std::vector<Scalar>;

// Mutable assembly form; freeze with make_algebra().
struct AlgebraData {
    Field field = Field::rationals();
    int grading_mod = 0; // 0 = Z-graded; a > 0 = Z/aZ
    std::string name;
    std::vector<BasisElem> basis;
    std::vector<int> idempotents;                 // basis indices of e_0, e_1, ...
    std::vector<std::vector<ProductTerms>> mult;  // [i][j] -> terms of b_i * b_j

    void set_product(int i, int j, ProductTerms terms);
};

// Finite-dimensional graded algebra over Q or F_p, immutable once built.
// Basis elements are homogeneous; products are read off the structure
// constants. The zero algebra (empty basis) is allowed.
class GradedAlgebra {
public:
    const Field& field() const { return d_.field; }
    int grading_mod() const { return d_.grading_mod; }
    const std::string& name() const { return d_.name; }
    std::size_t dim() const { return d_.basis.size(); }
    const std::vector<BasisElem>& basis() const { return d_.basis; }
    const BasisElem& basis_elem(int i) const { return d_.basis[i]; }
    const std::vector<int>& idempotents() const { return d_.idempotents; }
    std::size_t num_idempotents() const { return d_.idempotents.size(); }
    const ProductTerms& product(int i, int j) const { return d_.mult[i][j]; }

    Elem zero_elem() const { return Elem(dim(), Scalar::zero(d_.field)); }
    Elem unit() const;
    Elem basis_vec(int i) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero_elem(const Elem& a) const;

    // Matrix of left multiplication x -> a*x on the basis (row convention:
    // coords(a*b_j) fills column j ... see implementation).
    Matrix left_mult_matrix(const Elem& a) const;
    Matrix right_mult_matrix(const Elem& a) const;

    // Degree -> indices of basis elements in that degree (sorted).
    const std::map<int, std::vector<int>>& degree_index() const { return degree_index_; }
    std::map<int, int> degree_dims() const;
    int max_degree() const;

    // Small generating set (basis indices): the idempotents plus the
    // extra elements needed to generate everything under products.
    const std::vector<int>& generators() const { return generators_; }

    // Homogeneous basis of the Jacobson radical (computed exactly from the
    // trace form; in characteristic p with the lifted power-trace
    // refinement).
    const std::vector<Elem>& radical() const { return radical_; }

    // Homogeneous basis of Soc(A_A) = right annihilator of the radical.
    const std::vector<Elem>& socle() const { return socle_; }

    // The opposite algebra; opposite of the opposite is the original object.
    // Lifetime is tied to the original algebra.
    const GradedAlgebra* opposite_raw() const;
    const GradedAlgebra& op() const { return *opposite_raw(); }

    bool positively_graded() const;

    friend AlgebraPtr make_algebra(AlgebraData data);
    friend AlgebraPtr opposite(const AlgebraPtr& a);

    // Self-injectivity data, memoized (computed by structure.cpp).
    struct SelfInj {
        bool self_injective = false;
        std::vector<int> nakayama; // sigma with e_i A = D(A e_sigma(i))
    };
    const SelfInj& self_injectivity() const;

private:
    GradedAlgebra() = default;
    void finalize(bool build_opposite);
    void validate() const;
    void compute_generators();
    void compute_radical();
    void compute_socle();

    AlgebraData d_;
    std::map<int, std::vector<int>> degree_index_;
    std::vector<int> generators_;
    std::vector<Elem> radical_;
    std::vector<Elem> socle_;

    std::shared_ptr<GradedAlgebra> op_store_;   // owned by the original
    const GradedAlgebra* op_back_ = nullptr;    // set on the opposite copy

    mutable std::once_flag selfinj_once_;
    mutable SelfInj selfinj_;
};

// Freezes assembly data into an immutable algebra (validates associativity,
// unit, grading additivity; computes radical/socle/generators and the
// opposite algebra).
AlgebraPtr make_algebra(AlgebraData data);

// Opposite algebra sharing the lifetime of `a`.
AlgebraPtr opposite(const AlgebraPtr& a);

// Jacobson radical of an arbitrary structure-constant algebra presented by
// left-multiplication matrices; exact in both characteristics.
std::vector<std::vector<Scalar>> radical_of_table(
    const Field& f, const std::vector<Matrix>& left_mult, std::size_t dim);

} // namespace grmod
