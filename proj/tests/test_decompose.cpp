#include "doctest.h"

#include "grmod/cover.hpp"
#include "grmod/decompose.hpp"
#include "grmod/quiver.hpp"
#include "grmod/hom.hpp"

using namespace grmod;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("is_indecomposable") {
    auto A = nakayama_algebra(1, 3, Q, "Kx3");
    GradedModule R = regular_module(*A);
    GradedModule S = simple_module(*A, 0, 0);
    CHECK(is_indecomposable(S));
    CHECK(is_indecomposable(R));

    auto two = direct_sum(*A, {R, R});
    CHECK(!is_indecomposable(two.m));

    // X^1: the ungraded End is 2-dimensional local with nilpotent radical
    GradedModule X1 = truncate_below(R, 1).m;
    CHECK(is_indecomposable(X1));
    GradedModule U = forget_to_cyclic(X1, 1);
    CHECK(is_indecomposable(U));
    HomSpace H = hom0(U, U);
    CHECK(H.dim() == 2);
    CHECK(end_radical(U, H).size() == 1);

    CHECK_THROWS(is_indecomposable(zero_module(*A)));
}

TEST_CASE("decompose") {
    auto A = nakayama_algebra(1, 3, Q, "Kx3");
    GradedModule R = regular_module(*A);
    // A decomposes as itself
    Decomposition d = decompose(R);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.multiplicities[0] == 1);

    // X + X has one factor of multiplicity 2
    GradedModule X1 = truncate_below(R, 1).m;
    auto xx = direct_sum(*A, {X1, X1});
    Decomposition d2 = decompose(xx.m);
    REQUIRE(d2.factors.size() == 1);
    CHECK(d2.multiplicities[0] == 2);
    CHECK(module_isomorphism(d2.factors[0], X1).found());

    // T over K[x]/(x^3): three distinct indecomposables
    std::vector<GradedModule> tsum;
    for (int i = 0; i <= 2; ++i) tsum.push_back(truncate_above(shift_module(R, i), 0).m);
    auto T = direct_sum(*A, tsum);
    Decomposition d3 = decompose(T.m);
    CHECK(d3.pieces.size() == 3);
    CHECK(d3.factors.size() == 3);
}

TEST_CASE("decompose then reassemble is isomorphic to the input") {
    auto Pi = preprojective_algebra(linear_quiver(3), Q);
    GradedModule R = regular_module(*Pi);
    Decomposition d = decompose(R);
    std::vector<GradedModule> all = d.pieces;
    auto sum = direct_sum(*Pi, all);
    CHECK(module_isomorphism(sum.m, R).found());
    int total = 0;
    for (const auto& p : d.pieces) total += p.total_dim();
    CHECK(total == R.total_dim());
}

TEST_CASE("decompose over a prime field") {
    Field F3 = Field::prime(3);
    auto A = nakayama_algebra(2, 4, F3, "N24");
    GradedModule R = regular_module(*A);
    Decomposition d = decompose(R);
    CHECK(d.pieces.size() == 2); // e_1 A and e_2 A
    for (const auto& p : d.pieces) CHECK(is_indecomposable(p));
}

namespace {

// Kronecker module with dimension vector (2,2), arrows acting by I and by
// the companion matrix of x^2 - 2. Its endomorphism ring is the quadratic
// field generated by that companion matrix.
GradedModule kronecker_sqrt2(const AlgebraPtr& A) {
    const Field& f = A->field();
    GradedModule X = zero_module(*A, 0);
    X.dims[0] = 4; // u-block rows 0,1; v-block rows 2,3
    auto mat = [&](std::vector<long> e) {
        Matrix m(f, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = Scalar::of_int(f, e[i * 4 + j]);
        return m;
    };
    for (std::size_t b = 0; b < A->dim(); ++b) {
        const std::string& l = A->basis_elem(static_cast<int>(b)).label;
        if (l == "e1") X.act[b][0] = mat({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        else if (l == "e2") X.act[b][0] = mat({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
        else if (l == "a") X.act[b][0] = mat({0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
        else if (l == "b") X.act[b][0] = mat({0, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        else X.act[b][0] = mat(std::vector<long>(16, 0));
    }
    return X;
}

Quiver kronecker_quiver() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1, 0}, {"b", 0, 1, 0}};
    return q;
}

} // namespace

TEST_CASE("a non-split endomorphism field raises SplitnessWarning over Q and splits over F_7") {
    // over Q: End(X) is Q(sqrt 2), a division algebra of dimension 2
    auto AQ = path_algebra(kronecker_quiver(), Field::rationals(), "Kron");
    GradedModule XQ = kronecker_sqrt2(AQ);
    CHECK(hom0(XQ, XQ).dim() == 2);
    CHECK_THROWS_AS(is_indecomposable(XQ), SplitnessWarning);
    CHECK_THROWS_AS(decompose(XQ), SplitnessWarning);

    // over F_7 the companion matrix has eigenvalues +-3, so X splits
    auto A7 = path_algebra(kronecker_quiver(), Field::prime(7), "Kron7");
    GradedModule X7 = kronecker_sqrt2(A7);
    CHECK(!is_indecomposable(X7));
    Decomposition d = decompose(X7);
    CHECK(d.pieces.size() == 2);
    for (const auto& p : d.pieces) CHECK(p.total_dim() == 2);
}

TEST_CASE("splitting survives a change of basis that hides the summands") {
    auto A = nakayama_algebra(1, 2, Q, "Kx2");
    GradedModule S = simple_module(*A, 0, 0);
    auto sum = direct_sum(*A, {S, S, shift_module(S, 1)});
    Decomposition d = decompose(sum.m);
    REQUIRE(d.factors.size() == 2);
    int mults = d.multiplicities[0] + d.multiplicities[1];
    CHECK(mults == 3);
}
