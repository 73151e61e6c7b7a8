#include "grmod/cover.hpp"

#include <algorithm>

#include "grmod/hom.hpp"

namespace grmod {

std::map<std::pair<int, int>, int> graded_top(const GradedModule& X) {
    const GradedAlgebra& A = *X.A;
    const Field& f = A.field();
    std::map<std::pair<int, int>, int> out;
    // radical image rows per degree
    std::map<int, std::vector<std::vector<Scalar>>> rad_rows;
    for (const auto& r : A.radical()) {
        int rdeg = -1;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) { rdeg = A.basis_elem(static_cast<int>(i)).degree; break; }
        if (rdeg < 0) continue;
        for (const auto& [d, n] : X.dims) {
            Matrix img = X.elem_action(r, d);
            if (img.cols() == 0) continue;
            int d2 = X.wrap(d + rdeg);
            for (std::size_t i = 0; i < img.rows(); ++i) rad_rows[d2].push_back(img.row(i));
        }
    }
    for (const auto& [d, n] : X.dims) {
        auto it = rad_rows.find(d);
        SubspaceQuotient sq = subspace_quotient(f, n, it == rad_rows.end() ? std::vector<std::vector<Scalar>>{} : it->second);
        if (sq.quotient_dim == 0) continue;
        for (std::size_t u = 0; u < A.num_idempotents(); ++u) {
            Matrix Eu = sq.section * X.action(A.idempotents()[u], d) * sq.projection;
            std::size_t m = rank(Eu);
            if (m > 0) out[{static_cast<int>(u), d}] = static_cast<int>(m);
        }
    }
    return out;
}

namespace {

struct CoverPlan {
    std::vector<std::pair<int, int>> summands;   // (idempotent ordinal, shift)
    std::vector<std::vector<Scalar>> generators; // row in X at the top degree
    std::vector<int> gen_degree;
};

CoverPlan cover_plan(const GradedModule& X) {
    const GradedAlgebra& A = *X.A;
    const Field& f = A.field();
    CoverPlan plan;
    std::map<int, std::vector<std::vector<Scalar>>> rad_rows;
    for (const auto& r : A.radical()) {
        int rdeg = -1;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) { rdeg = A.basis_elem(static_cast<int>(i)).degree; break; }
        if (rdeg < 0) continue;
        for (const auto& [d, n] : X.dims) {
            Matrix img = X.elem_action(r, d);
            if (img.cols() == 0) continue;
            int d2 = X.wrap(d + rdeg);
            for (std::size_t i = 0; i < img.rows(); ++i) rad_rows[d2].push_back(img.row(i));
        }
    }
    for (const auto& [d, n] : X.dims) {
        auto it = rad_rows.find(d);
        SubspaceQuotient sq = subspace_quotient(f, n, it == rad_rows.end() ? std::vector<std::vector<Scalar>>{} : it->second);
        if (sq.quotient_dim == 0) continue;
        for (std::size_t u = 0; u < A.num_idempotents(); ++u) {
            int e = A.idempotents()[u];
            Matrix Eu = sq.section * X.action(e, d) * sq.projection;
            Rref R = rref(Eu);
            for (std::size_t row = 0; row < R.mat.rows(); ++row) {
                std::vector<Scalar> lift = R.mat.row(row);
                // lift to X_d and pin to the e_u-weight space
                std::vector<Scalar> g(n, Scalar::zero(f));
                Matrix lm = Matrix::from_rows(f, sq.quotient_dim, {lift}) * sq.section * X.action(e, d);
                for (int c = 0; c < n; ++c) g[c] = lm.at(0, c);
                plan.summands.emplace_back(static_cast<int>(u), -d);
                plan.generators.push_back(std::move(g));
                plan.gen_degree.push_back(d);
            }
        }
    }
    return plan;
}

} // namespace

CoverData projective_cover(const GradedModule& X) {
    const GradedAlgebra& A = *X.A;
    const Field& f = A.field();
    CoverPlan plan = cover_plan(X);

    std::vector<GradedModule> parts;
    std::vector<std::map<int, std::vector<int>>> slots;
    for (const auto& [u, s] : plan.summands) {
        SlotModule sm = window_module(A, u, s, std::nullopt, std::nullopt, X.mod);
        parts.push_back(std::move(sm.m));
        slots.push_back(std::move(sm.slots));
    }
    DirectSum P = direct_sum(A, parts, X.mod);

    ModuleMap pi;
    pi.A = &A;
    pi.mod = X.mod;
    pi.src_dims = P.m.dims;
    pi.tgt_dims = X.dims;
    for (const auto& [dd, n] : P.m.dims) {
        Matrix m(f, n, X.dim_at(dd));
        for (std::size_t s = 0; s < parts.size(); ++s) {
            auto it = slots[s].find(dd);
            if (it == slots[s].end()) continue;
            int off = P.offsets[s].at(dd);
            int d = plan.gen_degree[s];
            Matrix gen = Matrix::from_rows(f, X.dim_at(d), {plan.generators[s]});
            for (std::size_t r = 0; r < it->second.size(); ++r) {
                Matrix img = gen * X.action(it->second[r], d);
                for (std::size_t c = 0; c < img.cols(); ++c) m.at(off + r, c) = img.at(0, c);
            }
        }
        pi.comp[dd] = std::move(m);
    }

    // a minimal cover must surject
    for (const auto& [d, n] : X.dims)
        if (rank(pi.at(d)) != static_cast<std::size_t>(n))
            throw GrmodError("projective_cover: assembled map is not surjective");

    return CoverData{std::move(P.m), std::move(pi), std::move(plan.summands)};
}

GradedModule syzygy(const GradedModule& X) {
    CoverData cov = projective_cover(X);
    std::map<int, std::vector<std::vector<Scalar>>> rows;
    for (const auto& [d, n] : cov.P.dims) {
        for (const auto& v : kernel_basis(cov.pi.at(d).transpose())) rows[d].push_back(v);
    }
    return submodule(cov.P, rows).m;
}

GradedModule cosyzygy(const GradedModule& X) {
    if (!X.A->self_injectivity().self_injective)
        throw NotSelfInjective("cosyzygy needs a self-injective algebra");
    return dual_module(syzygy(dual_module(X)));
}

bool is_projective(const GradedModule& X) {
    if (X.is_zero()) return true;
    CoverData cov = projective_cover(X);
    return cov.P.total_dim() == X.total_dim();
}

StripResult strip_projectives(const GradedModule& X) {
    StripResult out;
    out.m = X;
    bool progressed = true;
    while (progressed && !out.m.is_zero()) {
        progressed = false;
        auto top = graded_top(out.m);
        for (const auto& [key, mult] : top) {
            auto [u, d] = key;
            GradedModule P = indecomposable_projective(*X.A, u, -d, X.mod);
            HomSpace from = hom0(P, out.m);
            HomSpace to = hom0(out.m, P);
            for (const auto& phi : from.basis) {
                for (const auto& psi : to.basis) {
                    ModuleMap c = compose(phi, psi);
                    auto cinv = invert(c);
                    if (!cinv) continue;
                    ModuleMap eps = compose(compose(psi, *cinv), phi);
                    std::map<int, std::vector<std::vector<Scalar>>> rows;
                    for (const auto& [dd, n] : out.m.dims)
                        for (const auto& v : kernel_basis(eps.at(dd).transpose())) rows[dd].push_back(v);
                    out.m = submodule(out.m, rows).m;
                    out.removed.emplace_back(u, -d);
                    progressed = true;
                    break;
                }
                if (progressed) break;
            }
            if (progressed) break;
        }
    }
    std::sort(out.removed.begin(), out.removed.end());
    return out;
}

GradedModule stable_shift(const GradedModule& X, int n) {
    if (!X.A->self_injectivity().self_injective)
        throw NotSelfInjective("stable shifts need a self-injective algebra");
    GradedModule cur = strip_projectives(X).m;
    for (int i = 0; i < std::abs(n); ++i) {
        cur = n > 0 ? cosyzygy(cur) : syzygy(cur);
        cur = strip_projectives(cur).m;
    }
    return cur;
}

namespace {

// Dual of a direct sum of projectives: oplus (e_u A(s))^vee = oplus e_u A^op(-s),
// with the dual of a map between such sums computed slotwise.
struct ProjPresentation {
    std::vector<std::pair<int, int>> summands; // (u, shift)
    std::vector<std::map<int, std::vector<int>>> slots;
    DirectSum sum;
    std::vector<GradedModule> parts;
};

ProjPresentation assemble(const GradedAlgebra& A, const std::vector<std::pair<int, int>>& summands, int mod) {
    ProjPresentation P;
    P.summands = summands;
    for (const auto& [u, s] : summands) {
        SlotModule sm = window_module(A, u, s, std::nullopt, std::nullopt, mod);
        P.parts.push_back(std::move(sm.m));
        P.slots.push_back(std::move(sm.slots));
    }
    P.sum = direct_sum(A, P.parts, mod);
    return P;
}

} // namespace

GradedModule transpose(const GradedModule& X) {
    const GradedAlgebra& A = *X.A;
    const GradedAlgebra& Aop = A.op();
    const Field& f = A.field();
    if (X.is_zero()) return zero_module(Aop, X.mod);

    CoverData cov0 = projective_cover(X);
    std::map<int, std::vector<std::vector<Scalar>>> krows;
    for (const auto& [d, n] : cov0.P.dims)
        for (const auto& v : kernel_basis(cov0.pi.at(d).transpose())) krows[d].push_back(v);
    SubmoduleResult K = submodule(cov0.P, krows);
    CoverData cov1 = projective_cover(K.m);
    ModuleMap pres = compose(cov1.pi, K.inclusion); // P1 -> P0

    ProjPresentation P0 = assemble(A, cov0.summands, X.mod);
    ProjPresentation P1 = assemble(A, cov1.summands, X.mod);

    // duals over the opposite algebra
    std::vector<std::pair<int, int>> d0, d1;
    for (const auto& [u, s] : P0.summands) d0.emplace_back(u, -s);
    for (const auto& [u, s] : P1.summands) d1.emplace_back(u, -s);
    ProjPresentation V0 = assemble(Aop, d0, X.mod);
    ProjPresentation V1 = assemble(Aop, d1, X.mod);

    // dual map V0 -> V1: slot (t, b) maps to sum over P1 summands r and
    // slots (r, k) of f-row-coefficient times the structure constants of b*c
    ModuleMap fv;
    fv.A = &Aop;
    fv.mod = X.mod;
    fv.src_dims = V0.sum.m.dims;
    fv.tgt_dims = V1.sum.m.dims;
    auto wrapd = [&](int d) { return X.mod > 0 ? ((d % X.mod) + X.mod) % X.mod : d; };
    for (const auto& [i, n0] : V0.sum.m.dims) {
        Matrix m(f, n0, V1.sum.m.dim_at(i));
        for (std::size_t t = 0; t < V0.parts.size(); ++t) {
            auto st = V0.slots[t].find(i);
            if (st == V0.slots[t].end()) continue;
            int row_off = V0.sum.offsets[t].at(i);
            for (std::size_t bi = 0; bi < st->second.size(); ++bi) {
                int b = st->second[bi];
                for (std::size_t r = 0; r < P1.parts.size(); ++r) {
                    int u_r = P1.summands[r].first;
                    int s_r = P1.summands[r].second;
                    int unit_deg = wrapd(-s_r);
                    // slot of (r, e_{u_r}) inside P1 at degree -s_r
                    auto pr = P1.slots[r].find(unit_deg);
                    if (pr == P1.slots[r].end()) continue;
                    int unit_elem = A.idempotents()[u_r];
                    auto pos_it = std::find(pr->second.begin(), pr->second.end(), unit_elem);
                    if (pos_it == pr->second.end()) continue;
                    int unit_row = P1.sum.offsets[r].at(unit_deg) +
                                   static_cast<int>(pos_it - pr->second.begin());
                    Matrix fm = pres.at(unit_deg);
                    // P0 slots at degree -s_r within summand t
                    auto ct = P0.slots[t].find(unit_deg);
                    if (ct == P0.slots[t].end()) continue;
                    int coff = P0.sum.offsets[t].at(unit_deg);
                    for (std::size_t ci = 0; ci < ct->second.size(); ++ci) {
                        const Scalar& lambda = fm.at(unit_row, coff + ci);
                        if (lambda.is_zero()) continue;
                        int c = ct->second[ci];
                        for (const auto& [k, coeff] : A.product(b, c)) {
                            // k lands in the V1 summand r at degree i
                            auto vk = V1.slots[r].find(i);
                            if (vk == V1.slots[r].end()) continue;
                            auto kp = std::find(vk->second.begin(), vk->second.end(), k);
                            if (kp == vk->second.end()) continue;
                            int col = V1.sum.offsets[r].at(i) + static_cast<int>(kp - vk->second.begin());
                            m.at(row_off + bi, col) += lambda * coeff;
                        }
                    }
                }
            }
        }
        fv.comp[i] = std::move(m);
    }

    if (!is_module_map(V0.sum.m, V1.sum.m, fv))
        throw GrmodError("transpose: dualized presentation map is not a module map");

    std::map<int, std::vector<std::vector<Scalar>>> image;
    for (const auto& [d, n] : V0.sum.m.dims) {
        Matrix rowsm = fv.at(d);
        for (std::size_t r = 0; r < rowsm.rows(); ++r) image[d].push_back(rowsm.row(r));
    }
    return quotient(V1.sum.m, image).m;
}

GradedModule tau(const GradedModule& X) {
    return dual_module(transpose(X));
}

GradedModule tau_inverse(const GradedModule& X) {
    return transpose(dual_module(X));
}

} // namespace grmod
