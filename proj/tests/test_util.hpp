#pragma once

// Shared test helper: seeded random graded modules as bounded random
// quotients of small random projectives.

#include <random>

#include "grmod/module.hpp"

namespace grmod::testutil {

inline GradedModule random_module(const GradedAlgebra& A, std::mt19937_64& rng, int max_dim = 12) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::size_t k = 1 + rng() % 2;
        std::vector<GradedModule> parts;
        for (std::size_t i = 0; i < k; ++i)
            parts.push_back(indecomposable_projective(A, static_cast<int>(rng() % A.num_idempotents()),
                                                      static_cast<int>(rng() % 5) - 2));
        DirectSum P = direct_sum(A, parts);

        std::map<int, std::vector<std::vector<Scalar>>> rows;
        int gens = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < gens && !A.radical().empty(); ++g) {
            const Elem& r = A.radical()[rng() % A.radical().size()];
            int rdeg = -1;
            for (std::size_t i = 0; i < r.size(); ++i)
                if (!r[i].is_zero()) { rdeg = A.basis_elem(static_cast<int>(i)).degree; break; }
            std::vector<int> degs;
            for (const auto& [d, n] : P.m.dims) degs.push_back(d);
            int d = degs[rng() % degs.size()];
            Matrix img = P.m.elem_action(r, d);
            if (img.rows() == 0 || img.cols() == 0) continue;
            std::vector<Scalar> v(img.cols(), Scalar::zero(A.field()));
            bool nz = false;
            for (std::size_t rr = 0; rr < img.rows(); ++rr) {
                long c = static_cast<long>(rng() % 5) - 2;
                if (c == 0) continue;
                for (std::size_t cc = 0; cc < img.cols(); ++cc)
                    v[cc] += Scalar::of_int(A.field(), c) * img.at(rr, cc);
                nz = true;
            }
            if (!nz) continue;
            // close the generator's orbit under the whole basis action
            int gd = d + rdeg;
            for (std::size_t b = 0; b < A.dim(); ++b) {
                Matrix act = P.m.action(static_cast<int>(b), gd);
                if (act.cols() == 0) continue;
                Matrix w = Matrix::from_rows(A.field(), v.size(), {v}) * act;
                bool wnz = false;
                for (std::size_t cc = 0; cc < w.cols(); ++cc) wnz = wnz || !w.at(0, cc).is_zero();
                if (wnz) rows[gd + A.basis_elem(static_cast<int>(b)).degree].push_back(w.row(0));
            }
        }
        GradedModule X = quotient(P.m, rows).m;
        if (!X.is_zero() && X.total_dim() <= max_dim) return X;
    }
    return simple_module(A, 0, 0);
}

} // namespace grmod::testutil
