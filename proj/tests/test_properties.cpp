#include "doctest.h"

#include <random>
#include <thread>

#include "test_util.hpp"

#include "grmod/cover.hpp"
#include "grmod/decompose.hpp"
#include "grmod/quiver.hpp"
#include "grmod/tilting.hpp"

using namespace grmod;

namespace {
const Field Q = Field::rationals();
} // namespace

TEST_CASE("random-module property suite on three algebras") {
    std::vector<AlgebraPtr> algebras = {nakayama_algebra(1, 3, Q, "Kx3"),
                                        exterior_style_algebra(2, Q),
                                        preprojective_algebra(linear_quiver(2), Q)};
    for (const auto& A : algebras) {
        std::mt19937_64 rng(2024);
        bool selfinj = A->self_injectivity().self_injective;
        GradedModule prev = zero_module(*A);
        for (int i = 0; i < 10; ++i) {
            GradedModule X = grmod::testutil::random_module(*A, rng);

            // Hom decomposition identities
            CHECK(verify_hom_decomposition(X, X));
            if (!prev.is_zero()) {
                CHECK(verify_hom_decomposition(X, prev));
                CHECK(verify_cyclic_stable_decomposition(X, prev, 1));
                CHECK(verify_cyclic_stable_decomposition(X, prev, 2));
            }

            // double dual
            GradedModule DD = dual_module(dual_module(X));
            CHECK(DD.same_presentation(X));

            // syzygy-cosyzygy round trip on the projective-free part
            if (selfinj) {
                GradedModule S = strip_projectives(X).m;
                if (!S.is_zero()) {
                    CHECK(module_isomorphism(cosyzygy(syzygy(S)), S, 7).found());
                }
            }

            // decompose and reassemble
            Decomposition dec = decompose(X, 11);
            if (!X.is_zero()) {
                auto sum = direct_sum(*A, dec.pieces);
                CHECK(module_isomorphism(sum.m, X, 13).found());
            }
            prev = X;
        }
    }
}

TEST_CASE("projective cover minimality on random modules") {
    auto A = trivial_extension(*path_algebra(linear_quiver(2), Q), "trivKA2");
    std::mt19937_64 rng(99);
    for (int i = 0; i < 8; ++i) {
        GradedModule X = grmod::testutil::random_module(*A, rng);
        CoverData c = projective_cover(X);
        CHECK(graded_top(c.P) == graded_top(X));
        // surjective in every degree
        for (const auto& [d, n] : X.dims) CHECK(rank(c.pi.at(d)) == static_cast<std::size_t>(n));
        // kernel sits inside rad P: the cover of the kernel has no summand
        // shared with the top of P in the same degree... minimality is
        // equivalent to the graded-top equality checked above
    }
}

TEST_CASE("stable shifts are quasi-inverse on random modules") {
    auto A = nakayama_algebra(1, 4, Q, "Kx4");
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 6; ++i) {
        GradedModule X = strip_projectives(grmod::testutil::random_module(*A, rng)).m;
        if (X.is_zero()) continue;
        CHECK(module_isomorphism(stable_shift(X, -1), syzygy(X), 3).found());
        CHECK(module_isomorphism(stable_shift(stable_shift(X, 1), -1), X, 5).found());
    }
}

TEST_CASE("concurrent reads of one algebra are safe") {
    auto A = nakayama_algebra(1, 3, Q, "Kx3");
    GradedModule R = regular_module(*A);
    GradedModule X1 = truncate_below(R, 1).m;
    std::vector<std::thread> workers;
    std::vector<int> dims(4, -1);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            // exercise the lazily memoized self-injectivity data and the
            // pure hom/syzygy paths from several threads at once
            bool si = A->self_injectivity().self_injective;
            GradedModule W = syzygy(X1);
            dims[t] = si && hom0(X1, X1).dim() == 1 ? W.total_dim() : -1;
        });
    for (auto& w : workers) w.join();
    for (int t = 0; t < 4; ++t) CHECK(dims[t] == 1);
}

TEST_CASE("tau sends non-projective indecomposables to non-projective indecomposables") {
    auto A = nakayama_algebra(1, 3, Q, "Kx3");
    GradedModule R = regular_module(*A);
    std::vector<GradedModule> indec = {truncate_below(R, 1).m, truncate_below(R, 2).m,
                                       shift_module(truncate_below(R, 1).m, 3)};
    for (const auto& X : indec) {
        GradedModule t = tau(X);
        CHECK(!t.is_zero());
        CHECK(is_indecomposable(t));
        CHECK(!is_projective(t));
        CHECK(module_isomorphism(tau_inverse(t), X).found());
    }
}
