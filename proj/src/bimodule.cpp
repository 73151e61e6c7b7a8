#include "grmod/bimodule.hpp"

#include <algorithm>

#include "grmod/structure.hpp"

namespace grmod {

Matrix BlockBimodule::left_at(std::size_t g, int d) const {
    auto it = left_act[g].find(d);
    if (it != left_act[g].end()) return it->second;
    return Matrix(A->field(), sum.m.dim_at(d), sum.m.dim_at(d));
}

namespace {

// Staircase block bimodule: row r = A(base - r) windowed to [lo, hi] and
// then grade-shifted by `extra`; the Beilinson algebra acts by block
// left multiplication.
BlockBimodule staircase(const GradedAlgebra& A, int l, int base, std::optional<int> lo,
                        std::optional<int> hi, int extra) {
    BlockBimodule B;
    B.A = &A;
    B.gamma = beilinson_algebra(A, l);
    B.gamma_slots = beilinson_slots(A, l);
    if (B.gamma->dim() != B.gamma_slots.size())
        throw GrmodError("staircase: slot order out of sync with the Beilinson algebra");

    std::vector<GradedModule> parts;
    for (int r = 0; r < l; ++r) {
        SlotModule sm = window_module(A, std::nullopt, base - r, lo, hi);
        if (extra != 0) {
            sm.m = shift_module(sm.m, extra);
            std::map<int, std::vector<int>> moved;
            for (auto& [d, v] : sm.slots) moved[d - extra] = std::move(v);
            sm.slots = std::move(moved);
        }
        B.rows.push_back(std::move(sm));
        parts.push_back(B.rows.back().m);
    }
    B.sum = direct_sum(A, parts);

    const Field& f = A.field();
    B.left_act.assign(B.gamma->dim(), {});
    for (std::size_t g = 0; g < B.gamma_slots.size(); ++g) {
        auto [br, bc, e] = B.gamma_slots[g];
        // maps row bc into row br by left multiplication with e
        for (const auto& [d, n] : B.sum.m.dims) {
            Matrix m(f, n, n);
            auto src = B.rows[bc].slots.find(d);
            auto tgt = B.rows[br].slots.find(d);
            if (src != B.rows[bc].slots.end() && tgt != B.rows[br].slots.end()) {
                int roff = B.sum.offsets[bc].at(d);
                int coff = B.sum.offsets[br].at(d);
                for (std::size_t i = 0; i < src->second.size(); ++i)
                    for (const auto& [k, s] : A.product(e, src->second[i])) {
                        auto pos = std::find(tgt->second.begin(), tgt->second.end(), k);
                        if (pos == tgt->second.end()) continue; // truncated away
                        m.at(roff + i, coff + static_cast<int>(pos - tgt->second.begin())) += s;
                    }
            }
            if (!m.is_zero()) B.left_act[g][d] = std::move(m);
        }
    }
    return B;
}

int require_positive_parameter(const GradedAlgebra& A) {
    auto gp = gorenstein_parameter(A);
    if (!gp) throw NoGorensteinParameter("the socle is not concentrated in one degree");
    if (*gp < 1) throw NoGorensteinParameter("Gorenstein parameter must be >= 1 for the bimodule M");
    return *gp;
}

} // namespace

BlockBimodule build_M(const GradedAlgebra& A) {
    int l = require_positive_parameter(A);
    return staircase(A, l, 2 * l - 1, 1 - l, std::nullopt, 0);
}

bool verify_bimodule_axioms(const BlockBimodule& M) {
    const GradedAlgebra& G = *M.gamma;
    const GradedAlgebra& A = *M.A;
    // representation property: left_at(x*y) = left_at(y) * left_at(x) in the
    // row convention, on every basis pair
    for (std::size_t x = 0; x < G.dim(); ++x)
        for (std::size_t y = 0; y < G.dim(); ++y) {
            for (const auto& [d, n] : M.sum.m.dims) {
                Matrix lhs(A.field(), n, n);
                for (const auto& [k, s] : G.product(static_cast<int>(x), static_cast<int>(y)))
                    lhs = lhs + M.left_at(k, d).scaled(s);
                Matrix rhs = M.left_at(y, d) * M.left_at(x, d);
                if (!(lhs == rhs)) return false;
            }
        }
    // unit acts as the identity
    for (const auto& [d, n] : M.sum.m.dims) {
        Matrix u(A.field(), n, n);
        for (int e : G.idempotents()) u = u + M.left_at(e, d);
        if (!u.is_identity()) return false;
    }
    // commutation with the right action
    for (std::size_t g = 0; g < G.dim(); ++g)
        for (std::size_t b = 0; b < A.dim(); ++b) {
            int k = A.basis_elem(static_cast<int>(b)).degree;
            for (const auto& [d, n] : M.sum.m.dims) {
                Matrix lhs = M.left_at(g, d) * M.sum.m.action(static_cast<int>(b), d);
                Matrix rhs = M.sum.m.action(static_cast<int>(b), d) * M.left_at(g, d + k);
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

bool verify_M_syzygy_sequence(const GradedAlgebra& A) {
    int l = require_positive_parameter(A);
    BlockBimodule M = staircase(A, l, 2 * l - 1, 1 - l, std::nullopt, 0);
    BlockBimodule P = staircase(A, l, 2 * l - 1, std::nullopt, std::nullopt, 0);
    BlockBimodule Tl = staircase(A, l, l - 1, std::nullopt, 0, l); // T-bar(l)
    if (!verify_bimodule_axioms(M) || !verify_bimodule_axioms(P) || !verify_bimodule_axioms(Tl))
        return false;

    const Field& f = A.field();
    // inclusion and projection on matching slots
    auto slot_map = [&](const BlockBimodule& src, const BlockBimodule& tgt) {
        std::map<int, Matrix> comp;
        for (const auto& [d, n] : src.sum.m.dims) {
            Matrix m(f, n, tgt.sum.m.dim_at(d));
            for (int r = 0; r < l; ++r) {
                auto s = src.rows[r].slots.find(d);
                auto t = tgt.rows[r].slots.find(d);
                if (s == src.rows[r].slots.end() || t == tgt.rows[r].slots.end()) continue;
                int roff = src.sum.offsets[r].at(d);
                int coff = tgt.sum.offsets[r].at(d);
                for (std::size_t i = 0; i < s->second.size(); ++i) {
                    auto pos = std::find(t->second.begin(), t->second.end(), s->second[i]);
                    if (pos == t->second.end()) continue;
                    m.at(roff + i, coff + static_cast<int>(pos - t->second.begin())) = Scalar::one(f);
                }
            }
            comp[d] = std::move(m);
        }
        return comp;
    };
    auto incl = slot_map(M, P);
    auto proj = slot_map(P, Tl);

    for (const auto& [d, n] : P.sum.m.dims) {
        int md = M.sum.m.dim_at(d), td = Tl.sum.m.dim_at(d);
        if (md + td != n) return false;
        Matrix in = incl.count(d) ? incl.at(d) : Matrix(f, md, n);
        Matrix pr = proj.count(d) ? proj.at(d) : Matrix(f, n, td);
        if (rank(in) != static_cast<std::size_t>(md)) return false;
        if (rank(pr) != static_cast<std::size_t>(td)) return false;
        if (!(in * pr).is_zero()) return false;
    }
    // maps are right A-linear
    for (std::size_t b = 0; b < A.dim(); ++b) {
        int k = A.basis_elem(static_cast<int>(b)).degree;
        for (const auto& [d, n] : M.sum.m.dims) {
            Matrix in_d = incl.count(d) ? incl.at(d) : Matrix(f, n, P.sum.m.dim_at(d));
            Matrix in_dk = incl.count(d + k) ? incl.at(d + k)
                                             : Matrix(f, M.sum.m.dim_at(d + k), P.sum.m.dim_at(d + k));
            if (!(M.sum.m.action(static_cast<int>(b), d) * in_dk ==
                  in_d * P.sum.m.action(static_cast<int>(b), d)))
                return false;
        }
        for (const auto& [d, n] : P.sum.m.dims) {
            Matrix pr_d = proj.count(d) ? proj.at(d) : Matrix(f, n, Tl.sum.m.dim_at(d));
            Matrix pr_dk = proj.count(d + k) ? proj.at(d + k)
                                             : Matrix(f, P.sum.m.dim_at(d + k), Tl.sum.m.dim_at(d + k));
            if (!(P.sum.m.action(static_cast<int>(b), d) * pr_dk ==
                  pr_d * Tl.sum.m.action(static_cast<int>(b), d)))
                return false;
        }
    }
    // maps are Gamma-equivariant
    for (std::size_t g = 0; g < M.gamma->dim(); ++g) {
        for (const auto& [d, n] : M.sum.m.dims) {
            Matrix in_d = incl.count(d) ? incl.at(d) : Matrix(f, n, P.sum.m.dim_at(d));
            if (!(M.left_at(g, d) * in_d == in_d * P.left_at(g, d))) return false;
        }
        for (const auto& [d, n] : P.sum.m.dims) {
            Matrix pr_d = proj.count(d) ? proj.at(d) : Matrix(f, n, Tl.sum.m.dim_at(d));
            if (!(P.left_at(g, d) * pr_d == pr_d * Tl.left_at(g, d))) return false;
        }
    }
    return true;
}

bool verify_M_tensor_T(const GradedAlgebra& A) {
    int l = require_positive_parameter(A);
    BlockBimodule M = staircase(A, l, 2 * l - 1, 1 - l, std::nullopt, 0);
    BlockBimodule T = staircase(A, l, l - 1, std::nullopt, 0, 0); // T-bar
    const GradedAlgebra& G = *M.gamma;
    const Field& f = A.field();

    // flat coordinates
    struct FlatSlot { int row; int degree; int idx; };
    auto flatten = [&](const BlockBimodule& B) {
        std::vector<FlatSlot> out;
        for (const auto& [d, n] : B.sum.m.dims)
            for (int r = 0; r < l; ++r) {
                auto it = B.rows[r].slots.find(d);
                if (it == B.rows[r].slots.end()) continue;
                for (std::size_t i = 0; i < it->second.size(); ++i)
                    out.push_back({r, d, static_cast<int>(i)});
            }
        return out;
    };
    auto flat_index = [&](const BlockBimodule& B, const std::vector<FlatSlot>& fl, int row, int d,
                          int idx) -> int {
        for (std::size_t i = 0; i < fl.size(); ++i)
            if (fl[i].row == row && fl[i].degree == d && fl[i].idx == idx) return static_cast<int>(i);
        (void)B;
        return -1;
    };
    std::vector<FlatSlot> fm = flatten(M), ft = flatten(T);
    const std::size_t nm = fm.size(), nt = ft.size();
    if (nm != static_cast<std::size_t>(M.total_dim())) throw GrmodError("tensor: flat size mismatch");

    // right Gamma-action on M in flat coordinates: gamma slot (j, c2, e)
    // acts from column degree 1-l+j to 1-l+c2 by right multiplication
    auto right_gamma_on_M = [&](std::size_t g) {
        auto [j, c2, e] = M.gamma_slots[g];
        Matrix m(f, nm, nm);
        int dsrc = 1 - l + j, dtgt = 1 - l + c2;
        for (std::size_t i = 0; i < nm; ++i) {
            if (fm[i].degree != dsrc) continue;
            int x = M.rows[fm[i].row].slots.at(dsrc)[fm[i].idx];
            for (const auto& [k, s] : A.product(x, e)) {
                auto it = M.rows[fm[i].row].slots.find(dtgt);
                if (it == M.rows[fm[i].row].slots.end()) continue;
                auto pos = std::find(it->second.begin(), it->second.end(), k);
                if (pos == it->second.end()) continue;
                int col = flat_index(M, fm, fm[i].row, dtgt, static_cast<int>(pos - it->second.begin()));
                if (col >= 0) m.at(i, col) += s;
            }
        }
        return m;
    };
    // left Gamma-action on T-bar in flat coordinates
    auto left_gamma_on_T = [&](std::size_t g) {
        Matrix m(f, nt, nt);
        for (std::size_t i = 0; i < nt; ++i) {
            int d = ft[i].degree;
            Matrix L = T.left_at(g, d);
            int roff = T.sum.offsets[ft[i].row].count(d) ? T.sum.offsets[ft[i].row].at(d) : -1;
            if (roff < 0) continue;
            for (std::size_t jj = 0; jj < nt; ++jj) {
                if (ft[jj].degree != d) continue;
                int coff = T.sum.offsets[ft[jj].row].count(d) ? T.sum.offsets[ft[jj].row].at(d) : -1;
                if (coff < 0) continue;
                m.at(i, jj) = L.at(roff + ft[i].idx, coff + ft[jj].idx);
            }
        }
        return m;
    };

    // tensor relations: (m.g (x) t) - (m (x) g.t) for every gamma basis slot
    const std::size_t N = nm * nt;
    std::vector<std::vector<Scalar>> rel;
    for (std::size_t g = 0; g < G.dim(); ++g) {
        Matrix RG = right_gamma_on_M(g);
        Matrix LT = left_gamma_on_T(g);
        for (std::size_t i = 0; i < nm; ++i)
            for (std::size_t j = 0; j < nt; ++j) {
                std::vector<Scalar> v(N, Scalar::zero(f));
                bool nz = false;
                for (std::size_t i2 = 0; i2 < nm; ++i2)
                    if (!RG.at(i, i2).is_zero()) {
                        v[i2 * nt + j] += RG.at(i, i2);
                        nz = true;
                    }
                for (std::size_t j2 = 0; j2 < nt; ++j2)
                    if (!LT.at(j, j2).is_zero()) {
                        v[i * nt + j2] -= LT.at(j, j2);
                        nz = true;
                    }
                if (nz) rel.push_back(std::move(v));
            }
    }
    SubspaceQuotient q = subspace_quotient(f, N, rel);

    // dimension identity before the isomorphism search
    if (q.quotient_dim != nm) return false;

    // multiplication map mu(m (x) t) = m t in flat M coordinates
    Matrix mu(f, N, nm);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            // column gate: m's degree must be 1-l+c where c = T-row of t
            if (fm[i].degree != 1 - l + ft[j].row) continue;
            int x = M.rows[fm[i].row].slots.at(fm[i].degree)[fm[i].idx];
            int y = T.rows[ft[j].row].slots.at(ft[j].degree)[ft[j].idx];
            for (const auto& [k, s] : A.product(x, y)) {
                auto it = M.rows[fm[i].row].slots.find(ft[j].degree);
                if (it == M.rows[fm[i].row].slots.end()) continue;
                auto pos = std::find(it->second.begin(), it->second.end(), k);
                if (pos == it->second.end()) continue;
                int col = flat_index(M, fm, fm[i].row, ft[j].degree,
                                     static_cast<int>(pos - it->second.begin()));
                if (col >= 0) mu.at(i * nt + j, col) += s;
            }
        }

    // mu vanishes on the relations
    for (const auto& r : rel) {
        Matrix row = Matrix::from_rows(f, N, {r}) * mu;
        if (!row.is_zero()) return false;
    }
    // induced map on the quotient is bijective
    Matrix induced = q.section * mu; // quotient -> M
    if (!invertible(induced)) return false;

    // degree compatibility: tensor degree (= T-bar degree) matches the
    // M-degree of the image
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            for (std::size_t c = 0; c < nm; ++c)
                if (!mu.at(i * nt + j, c).is_zero() && fm[c].degree != ft[j].degree) return false;

    // equivariance of mu for the right A-action and the left Gamma-action
    // right A: (m (x) t).b = m (x) t.b
    for (std::size_t b = 0; b < A.dim(); ++b) {
        // action of b on flat T coordinates
        Matrix TB(f, nt, nt);
        for (std::size_t j = 0; j < nt; ++j) {
            int d = ft[j].degree;
            int k = A.basis_elem(static_cast<int>(b)).degree;
            Matrix act = T.sum.m.action(static_cast<int>(b), d);
            int roff = T.sum.offsets[ft[j].row].count(d) ? T.sum.offsets[ft[j].row].at(d) : -1;
            if (roff < 0) continue;
            for (std::size_t j2 = 0; j2 < nt; ++j2) {
                if (ft[j2].degree != d + k) continue;
                int coff = T.sum.offsets[ft[j2].row].count(d + k) ? T.sum.offsets[ft[j2].row].at(d + k) : -1;
                if (coff < 0) continue;
                TB.at(j, j2) = act.at(roff + ft[j].idx, coff + ft[j2].idx);
            }
        }
        Matrix MB(f, nm, nm);
        for (std::size_t i = 0; i < nm; ++i) {
            int d = fm[i].degree;
            int k = A.basis_elem(static_cast<int>(b)).degree;
            Matrix act = M.sum.m.action(static_cast<int>(b), d);
            int roff = M.sum.offsets[fm[i].row].count(d) ? M.sum.offsets[fm[i].row].at(d) : -1;
            if (roff < 0) continue;
            for (std::size_t i2 = 0; i2 < nm; ++i2) {
                if (fm[i2].degree != d + k) continue;
                int coff = M.sum.offsets[fm[i2].row].count(d + k) ? M.sum.offsets[fm[i2].row].at(d + k) : -1;
                if (coff < 0) continue;
                MB.at(i, i2) = act.at(roff + fm[i].idx, coff + fm[i2].idx);
            }
        }
        // tensor action = id (x) TB, then mu == mu then MB
        for (std::size_t i = 0; i < nm; ++i)
            for (std::size_t j = 0; j < nt; ++j) {
                std::vector<Scalar> lhs(nm, Scalar::zero(f)), rhs(nm, Scalar::zero(f));
                for (std::size_t j2 = 0; j2 < nt; ++j2) {
                    if (TB.at(j, j2).is_zero()) continue;
                    for (std::size_t c = 0; c < nm; ++c) lhs[c] += TB.at(j, j2) * mu.at(i * nt + j2, c);
                }
                for (std::size_t c0 = 0; c0 < nm; ++c0) {
                    if (mu.at(i * nt + j, c0).is_zero()) continue;
                    for (std::size_t c = 0; c < nm; ++c) lhs[c] -= mu.at(i * nt + j, c0) * MB.at(c0, c);
                }
                (void)rhs;
                for (const auto& s : lhs)
                    if (!s.is_zero()) return false;
            }
    }
    // left Gamma: gamma.(m (x) t) = (gamma.m) (x) t maps to gamma.(mt)
    for (std::size_t g = 0; g < G.dim(); ++g) {
        // left action on flat M coordinates
        Matrix LM(f, nm, nm);
        for (std::size_t i = 0; i < nm; ++i) {
            int d = fm[i].degree;
            Matrix L = M.left_at(g, d);
            int roff = M.sum.offsets[fm[i].row].count(d) ? M.sum.offsets[fm[i].row].at(d) : -1;
            if (roff < 0) continue;
            for (std::size_t i2 = 0; i2 < nm; ++i2) {
                if (fm[i2].degree != d) continue;
                int coff = M.sum.offsets[fm[i2].row].count(d) ? M.sum.offsets[fm[i2].row].at(d) : -1;
                if (coff < 0) continue;
                LM.at(i, i2) = L.at(roff + fm[i].idx, coff + fm[i2].idx);
            }
        }
        for (std::size_t i = 0; i < nm; ++i)
            for (std::size_t j = 0; j < nt; ++j) {
                std::vector<Scalar> lhs(nm, Scalar::zero(f));
                for (std::size_t i2 = 0; i2 < nm; ++i2) {
                    if (LM.at(i, i2).is_zero()) continue;
                    for (std::size_t c = 0; c < nm; ++c) lhs[c] += LM.at(i, i2) * mu.at(i2 * nt + j, c);
                }
                for (std::size_t c0 = 0; c0 < nm; ++c0) {
                    if (mu.at(i * nt + j, c0).is_zero()) continue;
                    for (std::size_t c = 0; c < nm; ++c) lhs[c] -= mu.at(i * nt + j, c0) * LM.at(c0, c);
                }
                for (const auto& s : lhs)
                    if (!s.is_zero()) return false;
            }
    }
    return true;
}

bool verify_M_is_dual_gamma(const GradedAlgebra& A, std::uint64_t seed) {
    int l = require_positive_parameter(A);
    auto beta = graded_symmetrizing_form(A, l, seed);
    if (!beta) throw NotSymmetric("no graded symmetrizing form of degree " + std::to_string(l));
    BlockBimodule M = build_M(A);
    const GradedAlgebra& G = *M.gamma;
    const Field& f = A.field();

    struct FlatSlot { int row; int degree; int idx; };
    std::vector<FlatSlot> fm;
    for (const auto& [d, n] : M.sum.m.dims)
        for (int r = 0; r < l; ++r) {
            auto it = M.rows[r].slots.find(d);
            if (it == M.rows[r].slots.end()) continue;
            for (std::size_t i = 0; i < it->second.size(); ++i) fm.push_back({r, d, static_cast<int>(i)});
        }
    const std::size_t nm = fm.size(), ng = G.dim();
    if (nm != ng) return false;

    // Phi: M slot (row r, column c, element z) -> sum_a beta(z a) (c, r, a)*
    Matrix Phi(f, nm, ng);
    for (std::size_t i = 0; i < nm; ++i) {
        int r = fm[i].row;
        int c = fm[i].degree - (1 - l); // column index of the M block
        int z = M.rows[r].slots.at(fm[i].degree)[fm[i].idx];
        for (std::size_t g = 0; g < ng; ++g) {
            auto [gr, gc, a] = M.gamma_slots[g];
            if (gr != c || gc != r) continue;
            Elem prod = A.mul(A.basis_vec(z), A.basis_vec(a));
            Scalar val = Scalar::zero(f);
            for (std::size_t t = 0; t < A.dim(); ++t)
                if (!prod[t].is_zero()) val += prod[t] * (*beta)[t];
            Phi.at(i, g) = val;
        }
    }
    if (!invertible(Phi)) return false;

    // bimodule actions on D(Gamma): (gamma.f)(x) = f(x gamma), (f.gamma)(x) = f(gamma x)
    auto dual_left = [&](std::size_t g) {
        Matrix m(f, ng, ng);
        for (std::size_t d2 = 0; d2 < ng; ++d2)
            for (std::size_t dd = 0; dd < ng; ++dd) {
                // coeff of delta2 in delta * gamma
                for (const auto& [k, s] : G.product(static_cast<int>(dd), static_cast<int>(g)))
                    if (k == static_cast<int>(d2)) m.at(d2, dd) += s;
            }
        return m;
    };
    auto dual_right = [&](std::size_t g) {
        Matrix m(f, ng, ng);
        for (std::size_t d2 = 0; d2 < ng; ++d2)
            for (std::size_t dd = 0; dd < ng; ++dd) {
                for (const auto& [k, s] : G.product(static_cast<int>(g), static_cast<int>(dd)))
                    if (k == static_cast<int>(d2)) m.at(d2, dd) += s;
            }
        return m;
    };

    // flat left action on M
    auto left_on_M = [&](std::size_t g) {
        Matrix LM(f, nm, nm);
        for (std::size_t i = 0; i < nm; ++i) {
            int d = fm[i].degree;
            Matrix L = M.left_at(g, d);
            int roff = M.sum.offsets[fm[i].row].count(d) ? M.sum.offsets[fm[i].row].at(d) : -1;
            if (roff < 0) continue;
            for (std::size_t i2 = 0; i2 < nm; ++i2) {
                if (fm[i2].degree != d) continue;
                int coff = M.sum.offsets[fm[i2].row].count(d) ? M.sum.offsets[fm[i2].row].at(d) : -1;
                if (coff < 0) continue;
                LM.at(i, i2) = L.at(roff + fm[i].idx, coff + fm[i2].idx);
            }
        }
        return LM;
    };
    // flat right Gamma action on M (column gates)
    auto right_on_M = [&](std::size_t g) {
        auto [j, c2, e] = M.gamma_slots[g];
        Matrix m(f, nm, nm);
        int dsrc = 1 - l + j, dtgt = 1 - l + c2;
        for (std::size_t i = 0; i < nm; ++i) {
            if (fm[i].degree != dsrc) continue;
            int x = M.rows[fm[i].row].slots.at(dsrc)[fm[i].idx];
            for (const auto& [k, s] : A.product(x, e)) {
                auto it = M.rows[fm[i].row].slots.find(dtgt);
                if (it == M.rows[fm[i].row].slots.end()) continue;
                auto pos = std::find(it->second.begin(), it->second.end(), k);
                if (pos == it->second.end()) continue;
                for (std::size_t i2 = 0; i2 < nm; ++i2)
                    if (fm[i2].row == fm[i].row && fm[i2].degree == dtgt &&
                        fm[i2].idx == static_cast<int>(pos - it->second.begin()))
                        m.at(i, i2) += s;
            }
        }
        return m;
    };

    for (std::size_t g = 0; g < ng; ++g) {
        if (!(left_on_M(g) * Phi == Phi * dual_left(g))) return false;
        if (!(right_on_M(g) * Phi == Phi * dual_right(g))) return false;
    }
    return true;
}

} // namespace grmod
