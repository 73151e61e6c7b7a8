#include "grmod/hom.hpp"

#include <random>

#include "grmod/cover.hpp"

namespace grmod {

FlatLayout FlatLayout::between(const GradedModule& X, const GradedModule& Y) {
    FlatLayout L;
    for (const auto& [d, n] : X.dims) {
        int m = Y.dim_at(d);
        if (m == 0) continue;
        L.blocks.push_back({d, n, m, L.total});
        L.total += static_cast<std::size_t>(n) * m;
    }
    return L;
}

std::vector<Scalar> FlatLayout::flatten(const Field& f, const ModuleMap& m) const {
    std::vector<Scalar> v(total, Scalar::zero(f));
    for (const auto& b : blocks) {
        Matrix blk = m.at(b.degree);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) v[b.offset + r * b.cols + c] = blk.at(r, c);
    }
    return v;
}

ModuleMap FlatLayout::unflatten(const GradedModule& X, const GradedModule& Y,
                                const std::vector<Scalar>& v) const {
    ModuleMap m;
    m.A = X.A;
    m.mod = X.mod;
    m.src_dims = X.dims;
    m.tgt_dims = Y.dims;
    for (const auto& b : blocks) {
        Matrix blk(X.A->field(), b.rows, b.cols);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) blk.at(r, c) = v[b.offset + r * b.cols + c];
        m.comp[b.degree] = std::move(blk);
    }
    return m;
}

std::vector<Scalar> HomSpace::coords_of(const Field& f, const ModuleMap& m) const {
    std::vector<Scalar> flat = layout.flatten(f, m);
    if (basis.empty()) {
        for (const auto& x : flat)
            if (!x.is_zero()) throw GrmodError("coords_of: map outside the hom space");
        return {};
    }
    auto coords = coordinates_in_rowspace(flat_basis, flat);
    if (!coords) throw GrmodError("coords_of: map outside the hom space");
    return *coords;
}

HomSpace hom0(const GradedModule& X, const GradedModule& Y) {
    if (X.A != Y.A || X.mod != Y.mod) throw GrmodError("hom0: modules over different graded algebras");
    const Field& f = X.A->field();
    HomSpace H;
    H.layout = FlatLayout::between(X, Y);
    const std::size_t N = H.layout.total;
    if (N == 0) {
        H.flat_basis = Matrix(f, 0, 0);
        return H;
    }
    auto offset_of = [&](int d) -> long {
        for (const auto& b : H.layout.blocks)
            if (b.degree == d) return static_cast<long>(b.offset);
        return -1;
    };

    std::vector<std::vector<Scalar>> eqs;
    for (int g : X.A->generators()) {
        int k = X.A->basis_elem(g).degree;
        for (const auto& [d, xd] : X.dims) {
            int d2 = X.wrap(d + k);
            int xd2 = X.dim_at(d2), yd = Y.dim_at(d), yd2 = Y.dim_at(d2);
            long offF2 = (xd2 > 0 && yd2 > 0) ? offset_of(d2) : -1;
            long offF = yd > 0 ? offset_of(d) : -1;
            if (offF2 < 0 && offF < 0) continue;
            Matrix MX = X.action(g, d);
            Matrix MY = Y.action(g, d);
            for (int r = 0; r < xd; ++r)
                for (int c = 0; c < yd2; ++c) {
                    std::vector<Scalar> row(N, Scalar::zero(f));
                    bool nz = false;
                    if (offF2 >= 0)
                        for (int a = 0; a < xd2; ++a) {
                            const Scalar& s = MX.at(r, a);
                            if (s.is_zero()) continue;
                            row[offF2 + a * yd2 + c] += s;
                            nz = true;
                        }
                    if (offF >= 0)
                        for (int b = 0; b < yd; ++b) {
                            const Scalar& s = MY.at(b, c);
                            if (s.is_zero()) continue;
                            row[offF + r * yd + b] -= s;
                            nz = true;
                        }
                    if (nz) eqs.push_back(std::move(row));
                }
        }
    }
    Matrix E = Matrix::from_rows(f, N, eqs);
    auto ker = kernel_basis(E);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : ker) {
        H.basis.push_back(H.layout.unflatten(X, Y, v));
        rows.push_back(v);
    }
    H.flat_basis = Matrix::from_rows(f, N, rows);
    return H;
}

HomSpace stable_hom0(const GradedModule& X, const GradedModule& Y) {
    const Field& f = X.A->field();
    HomSpace H = hom0(X, Y);
    H.has_stable = true;
    std::vector<std::vector<Scalar>> fac;
    if (!H.basis.empty() && !Y.is_zero()) {
        CoverData cov = projective_cover(Y);
        HomSpace G = hom0(X, cov.P);
        for (const auto& g : G.basis) fac.push_back(H.coords_of(f, compose(g, cov.pi)));
    }
    H.factoring_coords = rref(Matrix::from_rows(f, H.basis.size(), fac)).mat;
    std::vector<std::vector<Scalar>> fr;
    for (std::size_t i = 0; i < H.factoring_coords.rows(); ++i) fr.push_back(H.factoring_coords.row(i));
    H.stable_q = subspace_quotient(f, H.basis.size(), fr);
    return H;
}

std::size_t hom_dim_ungraded(const GradedModule& X, const GradedModule& Y) {
    if (X.mod == 1) return hom0(X, Y).dim();
    return hom0(forget_to_cyclic(X, 1), forget_to_cyclic(Y, 1)).dim();
}

namespace {

// Shift window for sums over Hom(X, Y(i)): outside it the supports are
// disjoint.
std::pair<int, int> shift_window(const GradedModule& X, const GradedModule& Y) {
    if (X.is_zero() || Y.is_zero()) return {0, -1};
    return {Y.min_degree() - X.max_degree(), Y.max_degree() - X.min_degree()};
}

} // namespace

bool verify_hom_decomposition(const GradedModule& X, const GradedModule& Y) {
    std::size_t lhs = hom_dim_ungraded(X, Y);
    std::size_t rhs = 0;
    auto [lo, hi] = shift_window(X, Y);
    for (int i = lo; i <= hi; ++i) rhs += hom0(X, shift_module(Y, i)).dim();
    return lhs == rhs;
}

bool verify_cyclic_decomposition(const GradedModule& X, const GradedModule& Y, int a) {
    if (a <= 0) throw GrmodError("cyclic decomposition needs a > 0");
    std::size_t lhs = hom0(forget_to_cyclic(X, a), forget_to_cyclic(Y, a)).dim();
    std::size_t rhs = 0;
    auto [lo, hi] = shift_window(X, Y);
    for (int i = lo; i <= hi; ++i)
        if (((i % a) + a) % a == 0) rhs += hom0(X, shift_module(Y, i)).dim();
    return lhs == rhs;
}

bool verify_cyclic_stable_decomposition(const GradedModule& X, const GradedModule& Y, int a) {
    if (a <= 0) throw GrmodError("cyclic decomposition needs a > 0");
    std::size_t lhs = stable_hom0(forget_to_cyclic(X, a), forget_to_cyclic(Y, a)).stable_dim();
    std::size_t rhs = 0;
    auto [lo, hi] = shift_window(X, Y);
    for (int i = lo; i <= hi; ++i)
        if (((i % a) + a) % a == 0) rhs += stable_hom0(X, shift_module(Y, i)).stable_dim();
    return lhs == rhs;
}

EndAlgebra end_algebra(const std::vector<GradedModule>& parts, bool stable, const std::string& name) {
    EndAlgebra out;
    if (parts.empty()) {
        AlgebraData d;
        d.name = name;
        out.alg = make_algebra(std::move(d));
        return out;
    }
    const GradedAlgebra& A = *parts[0].A;
    const Field& f = A.field();
    for (const auto& p : parts)
        if (p.A != &A || p.mod != parts[0].mod) throw GrmodError("end_algebra: incompatible summands");

    const std::size_t k = parts.size();
    std::vector<std::vector<HomSpace>> hs(k, std::vector<HomSpace>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            hs[i][j] = stable ? stable_hom0(parts[i], parts[j]) : hom0(parts[i], parts[j]);

    // Block bases: coordinates in K^{dim hom0(M_i, M_j)}. Diagonal blocks
    // start with the class of the identity.
    struct BlockElem {
        std::vector<Scalar> coords;
        ModuleMap map;
        bool is_id = false;
    };
    std::vector<std::vector<std::vector<BlockElem>>> blocks(k, std::vector<std::vector<BlockElem>>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const HomSpace& H = hs[i][j];
            std::size_t hdim = H.dim();
            RowSpace chosen(f, hdim);
            if (stable) {
                for (std::size_t r = 0; r < H.factoring_coords.rows(); ++r)
                    chosen.add(H.factoring_coords.row(r));
            }
            std::size_t base_dim = chosen.dim();
            auto add_elem = [&](const std::vector<Scalar>& coords, bool is_id) {
                if (!chosen.add(coords)) return false;
                ModuleMap m = zero_map(parts[i], parts[j]);
                for (std::size_t t = 0; t < hdim; ++t)
                    if (!coords[t].is_zero()) m = m + H.basis[t].scaled(coords[t]);
                blocks[i][j].push_back({coords, std::move(m), is_id});
                return true;
            };
            if (i == j && hdim > 0) {
                auto cid = H.coords_of(f, identity_map(parts[i]));
                if (!add_elem(cid, true)) {
                    if (stable)
                        throw GrmodError("end_algebra: identity of a summand is stably zero "
                                         "(projective summand not stripped?)");
                    throw GrmodError("end_algebra: identity not in hom space");
                }
            }
            for (std::size_t t = 0; t < hdim && chosen.dim() < base_dim + (stable ? H.stable_dim() : hdim) ; ++t) {
                std::vector<Scalar> e(hdim, Scalar::zero(f));
                e[t] = Scalar::one(f);
                add_elem(e, false);
            }
        }

    // assemble the algebra
    AlgebraData d;
    d.field = f;
    d.name = name;
    struct Loc { std::size_t i, j, t; };
    std::vector<Loc> locs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < blocks[i][j].size(); ++t) locs.push_back({i, j, t});

    out.id_index.assign(k, -1);
    for (std::size_t n = 0; n < locs.size(); ++n) {
        const auto& [i, j, t] = locs[n];
        const BlockElem& be = blocks[i][j][t];
        BasisElem e;
        if (be.is_id) {
            e.label = "e" + std::to_string(i);
            out.id_index[i] = static_cast<int>(n);
        } else {
            e.label = "f" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t);
        }
        e.degree = 0;
        // product x*y = x o y (y applied first); the right unit of a map
        // M_i -> M_j is id_{M_i}, the left unit is id_{M_j}
        e.src = static_cast<int>(j);
        e.tgt = static_cast<int>(i);
        d.basis.push_back(std::move(e));
        out.rep.push_back(be.map);
        out.block.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    for (std::size_t s = 0; s < k; ++s) {
        if (out.id_index[s] < 0) throw GrmodError("end_algebra: zero summand has no identity");
        d.idempotents.push_back(out.id_index[s]);
    }

    // block-coordinate matrices for expanding products
    std::vector<std::vector<Matrix>> coord_mat(k, std::vector<Matrix>(k));
    std::vector<std::vector<std::vector<std::size_t>>> elem_at(k, std::vector<std::vector<std::size_t>>(k));
    for (std::size_t n = 0; n < locs.size(); ++n) elem_at[locs[n].i][locs[n].j].push_back(n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<std::vector<Scalar>> rows;
            for (const auto& be : blocks[i][j]) rows.push_back(be.coords);
            coord_mat[i][j] = Matrix::from_rows(f, hs[i][j].dim(), rows);
        }

    d.mult.assign(locs.size(), std::vector<ProductTerms>(locs.size()));
    for (std::size_t x = 0; x < locs.size(); ++x)
        for (std::size_t y = 0; y < locs.size(); ++y) {
            const auto& lx = locs[x];
            const auto& ly = locs[y];
            // x*y = x o y: y maps M_{ly.i} -> M_{ly.j}, x maps M_{lx.i} -> M_{lx.j};
            // composable iff ly.j == lx.i, result in block (ly.i, lx.j)
            if (ly.j != lx.i) continue;
            ModuleMap comp = compose(out.rep[y], out.rep[x]);
            const HomSpace& H = hs[ly.i][lx.j];
            std::vector<Scalar> c = H.coords_of(f, comp);
            if (stable) {
                // reduce modulo the factoring subspace
                RowSpace fac(f, H.dim());
                for (std::size_t r = 0; r < H.factoring_coords.rows(); ++r)
                    fac.add(H.factoring_coords.row(r));
                c = fac.reduce(c);
            }
            ProductTerms terms;
            if (!blocks[ly.i][lx.j].empty()) {
                // express c in the block basis, modulo the factoring part
                std::vector<std::vector<Scalar>> rows;
                for (const auto& be : blocks[ly.i][lx.j]) {
                    if (stable) {
                        RowSpace fac(f, H.dim());
                        for (std::size_t r = 0; r < H.factoring_coords.rows(); ++r)
                            fac.add(H.factoring_coords.row(r));
                        rows.push_back(fac.reduce(be.coords));
                    } else {
                        rows.push_back(be.coords);
                    }
                }
                auto coeffs = coordinates_in_rowspace(Matrix::from_rows(f, H.dim(), rows), c);
                if (!coeffs) throw GrmodError("end_algebra: product escapes the block basis");
                for (std::size_t t = 0; t < coeffs->size(); ++t)
                    if (!(*coeffs)[t].is_zero())
                        terms.emplace_back(static_cast<int>(elem_at[ly.i][lx.j][t]), (*coeffs)[t]);
            } else {
                bool nz = false;
                for (const auto& s : c) nz = nz || !s.is_zero();
                if (nz) throw GrmodError("end_algebra: nonzero product in an empty block");
            }
            d.mult[x][y] = std::move(terms);
        }
    out.alg = make_algebra(std::move(d));
    return out;
}

std::optional<std::vector<Scalar>> search_combination(
    const Field& f, std::size_t n, std::uint64_t seed,
    const std::function<bool(const std::vector<Scalar>&)>& good) {
    if (n == 0) return std::nullopt;
    // (i) each basis vector
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> v(n, Scalar::zero(f));
        v[i] = Scalar::one(f);
        if (good(v)) return v;
    }
    // (ii) seeded pseudorandom combinations with small coefficients
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 64; ++trial) {
        std::vector<Scalar> v(n, Scalar::zero(f));
        bool nz = false;
        for (std::size_t i = 0; i < n; ++i) {
            long c;
            if (f.kind == Field::Kind::Rational) {
                c = static_cast<long>(rng() % 7) - 3;
            } else {
                c = static_cast<long>(rng() % f.p);
            }
            v[i] = Scalar::of_int(f, c);
            nz = nz || !v[i].is_zero();
        }
        if (nz && good(v)) return v;
    }
    // (iii) exhaustive enumeration over small prime fields
    if (f.kind == Field::Kind::Prime && n <= 4) {
        double count = 1;
        for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(f.p);
        if (count <= 65536.0) {
            std::vector<std::uint64_t> idx(n, 0);
            while (true) {
                std::vector<Scalar> v(n, Scalar::zero(f));
                bool nz = false;
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] = Scalar::of_int(f, static_cast<long>(idx[i]));
                    nz = nz || idx[i] != 0;
                }
                if (nz && good(v)) return v;
                std::size_t pos = 0;
                while (pos < n && ++idx[pos] == f.p) idx[pos++] = 0;
                if (pos == n) break;
            }
        }
    }
    return std::nullopt;
}

IsoResult module_isomorphism(const GradedModule& X, const GradedModule& Y, std::uint64_t seed) {
    IsoResult res;
    if (X.dims != Y.dims) {
        res.status = IsoResult::Status::CertifiedAbsent;
        return res;
    }
    if (X.is_zero()) {
        res.status = IsoResult::Status::Found;
        res.iso = zero_map(X, Y);
        return res;
    }
    HomSpace H = hom0(X, Y);
    if (H.dim() == 0) {
        res.status = IsoResult::Status::CertifiedAbsent;
        return res;
    }
    const Field& f = X.A->field();
    auto combo = search_combination(f, H.dim(), seed, [&](const std::vector<Scalar>& v) {
        ModuleMap m = zero_map(X, Y);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) m = m + H.basis[i].scaled(v[i]);
        return m.is_iso();
    });
    if (combo) {
        ModuleMap m = zero_map(X, Y);
        for (std::size_t i = 0; i < combo->size(); ++i)
            if (!(*combo)[i].is_zero()) m = m + H.basis[i].scaled((*combo)[i]);
        res.status = IsoResult::Status::Found;
        res.iso = std::move(m);
        return res;
    }
    res.status = IsoResult::Status::NotFound;
    return res;
}

} // namespace grmod
