#include "grmod/module.hpp"

#include <algorithm>

namespace grmod {

int GradedModule::dim_at(int d) const {
    auto it = dims.find(wrap(d));
    return it == dims.end() ? 0 : it->second;
}

int GradedModule::total_dim() const {
    int t = 0;
    for (const auto& [d, n] : dims) t += n;
    return t;
}

int GradedModule::min_degree() const {
    if (dims.empty()) throw GrmodError("min_degree of the zero module");
    return dims.begin()->first;
}

int GradedModule::max_degree() const {
    if (dims.empty()) throw GrmodError("max_degree of the zero module");
    return dims.rbegin()->first;
}

Matrix GradedModule::action(int b, int d) const {
    int dw = wrap(d);
    int d2 = wrap(dw + A->basis_elem(b).degree);
    auto it = act[b].find(dw);
    if (it != act[b].end()) return it->second;
    return Matrix(A->field(), dim_at(dw), dim_at(d2));
}

Matrix GradedModule::elem_action(const Elem& x, int d) const {
    // only meaningful for homogeneous x; callers pass homogeneous elements
    int dw = wrap(d);
    int deg = -1;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) { deg = A->basis_elem(static_cast<int>(i)).degree; break; }
    if (deg == -1) return Matrix(A->field(), dim_at(dw), 0);
    Matrix r(A->field(), dim_at(dw), dim_at(dw + deg));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (A->basis_elem(static_cast<int>(i)).degree != deg)
            throw GrmodError("elem_action on an inhomogeneous element");
        r = r + action(static_cast<int>(i), dw).scaled(x[i]);
    }
    return r;
}

bool GradedModule::same_presentation(const GradedModule& o) const {
    if (A != o.A || mod != o.mod || dims != o.dims) return false;
    for (std::size_t b = 0; b < act.size(); ++b)
        for (const auto& [d, n] : dims)
            if (!(action(static_cast<int>(b), d) == o.action(static_cast<int>(b), d))) return false;
    return true;
}

GradedModule zero_module(const GradedAlgebra& A, int mod) {
    GradedModule m;
    m.A = &A;
    m.mod = mod;
    m.act.assign(A.dim(), {});
    return m;
}

Matrix ModuleMap::at(int d) const {
    int dw = mod > 0 ? ((d % mod) + mod) % mod : d;
    auto it = comp.find(dw);
    if (it != comp.end()) return it->second;
    auto sd = src_dims.find(dw);
    auto td = tgt_dims.find(dw);
    return Matrix(A->field(), sd == src_dims.end() ? 0 : sd->second, td == tgt_dims.end() ? 0 : td->second);
}

bool ModuleMap::is_zero() const {
    for (const auto& [d, m] : comp)
        if (!m.is_zero()) return false;
    return true;
}

bool ModuleMap::is_iso() const {
    for (const auto& [d, n] : src_dims) {
        auto it = tgt_dims.find(d);
        if ((it == tgt_dims.end() ? 0 : it->second) != n) return false;
    }
    for (const auto& [d, n] : tgt_dims) {
        auto it = src_dims.find(d);
        if ((it == src_dims.end() ? 0 : it->second) != n) return false;
    }
    for (const auto& [d, n] : src_dims)
        if (!invertible(at(d))) return false;
    return true;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    ModuleMap r = *this;
    for (auto& [d, m] : r.comp) m = m + o.at(d);
    return r;
}

ModuleMap ModuleMap::scaled(const Scalar& c) const {
    ModuleMap r = *this;
    for (auto& [d, m] : r.comp) m = m.scaled(c);
    return r;
}

ModuleMap identity_map(const GradedModule& X) {
    ModuleMap f;
    f.A = X.A;
    f.mod = X.mod;
    f.src_dims = f.tgt_dims = X.dims;
    for (const auto& [d, n] : X.dims) f.comp[d] = Matrix::identity(X.A->field(), n);
    return f;
}

ModuleMap zero_map(const GradedModule& X, const GradedModule& Y) {
    ModuleMap f;
    f.A = X.A;
    f.mod = X.mod;
    f.src_dims = X.dims;
    f.tgt_dims = Y.dims;
    for (const auto& [d, n] : X.dims)
        if (Y.dim_at(d) > 0) f.comp[d] = Matrix(X.A->field(), n, Y.dim_at(d));
    return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap r;
    r.A = f.A;
    r.mod = f.mod;
    r.src_dims = f.src_dims;
    r.tgt_dims = g.tgt_dims;
    for (const auto& [d, n] : f.src_dims) {
        auto it = g.tgt_dims.find(d);
        if (it == g.tgt_dims.end() || it->second == 0) continue;
        r.comp[d] = f.at(d) * g.at(d);
    }
    return r;
}

std::optional<ModuleMap> invert(const ModuleMap& f) {
    if (!f.is_iso()) return std::nullopt;
    ModuleMap r;
    r.A = f.A;
    r.mod = f.mod;
    r.src_dims = f.tgt_dims;
    r.tgt_dims = f.src_dims;
    for (const auto& [d, m] : f.comp) {
        auto inv = inverse(m);
        if (!inv) return std::nullopt;
        r.comp[d] = *inv;
    }
    return r;
}

bool is_module_map(const GradedModule& X, const GradedModule& Y, const ModuleMap& f) {
    if (X.A != Y.A || X.mod != Y.mod) return false;
    for (int g : X.A->generators()) {
        int k = X.A->basis_elem(g).degree;
        for (const auto& [d, n] : X.dims) {
            int d2 = X.wrap(d + k);
            Matrix lhs = X.action(g, d) * f.at(d2);
            Matrix rhs = f.at(d) * Y.action(g, d);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

SlotModule window_module(const GradedAlgebra& A, std::optional<int> u, int shift,
                         std::optional<int> lo, std::optional<int> hi, int mod) {
    if (mod > 0 && (lo || hi)) throw TruncationUndefined("cannot truncate a Z/aZ-graded module");
    if (!A.positively_graded()) throw GrmodError("window_module needs a positively graded algebra");
    SlotModule out;
    out.m = zero_module(A, mod);
    GradedModule& X = out.m;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const BasisElem& b = A.basis_elem(static_cast<int>(i));
        if (u && b.src != *u) continue;
        int md = b.degree - shift;
        if ((lo && md < *lo) || (hi && md > *hi)) continue;
        out.slots[X.wrap(md)].push_back(static_cast<int>(i));
    }
    for (const auto& [d, v] : out.slots) X.dims[d] = static_cast<int>(v.size());

    auto position = [&](int d, int elem) -> int {
        auto it = out.slots.find(d);
        if (it == out.slots.end()) return -1;
        auto jt = std::find(it->second.begin(), it->second.end(), elem);
        return jt == it->second.end() ? -1 : static_cast<int>(jt - it->second.begin());
    };

    for (std::size_t c = 0; c < A.dim(); ++c) {
        int cdeg = A.basis_elem(static_cast<int>(c)).degree;
        for (const auto& [d, v] : out.slots) {
            int d2 = X.wrap(d + cdeg);
            int cols = X.dim_at(d2);
            Matrix m(A.field(), v.size(), cols);
            for (std::size_t r = 0; r < v.size(); ++r) {
                for (const auto& [k, s] : A.product(v[r], static_cast<int>(c))) {
                    int pos = position(d2, k);
                    if (pos < 0) continue; // quotient above the window
                    m.at(r, pos) += s;
                }
            }
            X.act[c][d] = std::move(m);
        }
    }
    return out;
}

GradedModule indecomposable_projective(const GradedAlgebra& A, int u, int shift, int mod) {
    return window_module(A, u, shift, std::nullopt, std::nullopt, mod).m;
}

GradedModule regular_module(const GradedAlgebra& A, int mod) {
    return window_module(A, std::nullopt, 0, std::nullopt, std::nullopt, mod).m;
}

GradedModule simple_module(const GradedAlgebra& A, int u, int shift, int mod) {
    GradedModule P = indecomposable_projective(A, u, shift, mod);
    std::map<int, std::vector<std::vector<Scalar>>> rad_rows;
    for (const auto& r : A.radical()) {
        int rdeg = -1;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) { rdeg = A.basis_elem(static_cast<int>(i)).degree; break; }
        if (rdeg < 0) continue;
        for (const auto& [d, n] : P.dims) {
            Matrix img = P.elem_action(r, d);
            int d2 = P.wrap(d + rdeg);
            for (std::size_t i = 0; i < img.rows(); ++i) {
                auto row = img.row(i);
                bool nz = false;
                for (const auto& x : row) nz = nz || !x.is_zero();
                if (nz) rad_rows[d2].push_back(row);
            }
        }
    }
    return quotient(P, rad_rows).m;
}

DirectSum direct_sum(const GradedAlgebra& A, const std::vector<GradedModule>& parts, int mod) {
    DirectSum out;
    out.m = zero_module(A, mod);
    out.offsets.resize(parts.size());
    out.widths.resize(parts.size());
    for (std::size_t s = 0; s < parts.size(); ++s) {
        if (parts[s].A != &A || parts[s].mod != mod) throw GrmodError("direct_sum: incompatible summand");
        for (const auto& [d, n] : parts[s].dims) {
            out.offsets[s][d] = out.m.dim_at(d);
            out.widths[s][d] = n;
            out.m.dims[d] += n;
        }
    }
    for (std::size_t b = 0; b < A.dim(); ++b) {
        int bdeg = A.basis_elem(static_cast<int>(b)).degree;
        for (const auto& [d, n] : out.m.dims) {
            int d2 = out.m.wrap(d + bdeg);
            Matrix m(A.field(), n, out.m.dim_at(d2));
            for (std::size_t s = 0; s < parts.size(); ++s) {
                int roff = out.offsets[s].count(d) ? out.offsets[s][d] : -1;
                if (roff < 0) continue;
                int coff = out.offsets[s].count(d2) ? out.offsets[s][d2] : -1;
                Matrix blk = parts[s].action(static_cast<int>(b), d);
                if (blk.cols() > 0 && coff < 0) throw GrmodError("direct_sum: action escapes summand");
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (std::size_t j = 0; j < blk.cols(); ++j) m.at(roff + i, coff + j) = blk.at(i, j);
            }
            out.m.act[b][d] = std::move(m);
        }
    }
    return out;
}

ModuleMap DirectSum::inclusion(const std::vector<GradedModule>& parts, std::size_t s) const {
    ModuleMap f;
    f.A = m.A;
    f.mod = m.mod;
    f.src_dims = parts[s].dims;
    f.tgt_dims = m.dims;
    for (const auto& [d, n] : parts[s].dims) {
        Matrix blk(m.A->field(), n, m.dim_at(d));
        int off = offsets[s].at(d);
        for (int i = 0; i < n; ++i) blk.at(i, off + i) = Scalar::one(m.A->field());
        f.comp[d] = std::move(blk);
    }
    return f;
}

ModuleMap DirectSum::projection(const std::vector<GradedModule>& parts, std::size_t s) const {
    ModuleMap f;
    f.A = m.A;
    f.mod = m.mod;
    f.src_dims = m.dims;
    f.tgt_dims = parts[s].dims;
    for (const auto& [d, n] : m.dims) {
        int w = parts[s].dim_at(d);
        if (w == 0) continue;
        Matrix blk(m.A->field(), n, w);
        int off = offsets[s].at(d);
        for (int i = 0; i < w; ++i) blk.at(off + i, i) = Scalar::one(m.A->field());
        f.comp[d] = std::move(blk);
    }
    return f;
}

SubmoduleResult submodule(const GradedModule& X, const std::map<int, std::vector<std::vector<Scalar>>>& rows) {
    const Field& f = X.A->field();
    std::map<int, Rref> bases;
    for (const auto& [d, rs] : rows) {
        if (rs.empty()) continue;
        Rref R = rref(Matrix::from_rows(f, X.dim_at(d), rs));
        if (R.mat.rows() > 0) bases[d] = std::move(R);
    }
    SubmoduleResult out;
    out.m = zero_module(*X.A, X.mod);
    for (const auto& [d, R] : bases) out.m.dims[d] = static_cast<int>(R.mat.rows());
    for (std::size_t b = 0; b < X.A->dim(); ++b) {
        int bdeg = X.A->basis_elem(static_cast<int>(b)).degree;
        for (const auto& [d, R] : bases) {
            int d2 = X.wrap(d + bdeg);
            Matrix img = R.mat * X.action(static_cast<int>(b), d);
            auto it = bases.find(d2);
            if (it == bases.end()) {
                if (!img.is_zero()) throw GrmodError("submodule: span is not closed under the action");
                out.m.act[b][d] = Matrix(f, img.rows(), 0);
                continue;
            }
            auto coords = coordinates_rows_in_rowspace(it->second.mat, img);
            if (!coords) throw GrmodError("submodule: span is not closed under the action");
            out.m.act[b][d] = std::move(*coords);
        }
    }
    out.inclusion.A = X.A;
    out.inclusion.mod = X.mod;
    out.inclusion.src_dims = out.m.dims;
    out.inclusion.tgt_dims = X.dims;
    for (const auto& [d, R] : bases) out.inclusion.comp[d] = R.mat;
    return out;
}

QuotientResult quotient(const GradedModule& X, const std::map<int, std::vector<std::vector<Scalar>>>& rows) {
    const Field& f = X.A->field();
    std::map<int, SubspaceQuotient> q;
    for (const auto& [d, n] : X.dims) {
        auto it = rows.find(d);
        q[d] = subspace_quotient(f, n, it == rows.end() ? std::vector<std::vector<Scalar>>{} : it->second);
    }
    QuotientResult out;
    out.m = zero_module(*X.A, X.mod);
    for (const auto& [d, sq] : q)
        if (sq.quotient_dim > 0) out.m.dims[d] = static_cast<int>(sq.quotient_dim);
    for (std::size_t b = 0; b < X.A->dim(); ++b) {
        int bdeg = X.A->basis_elem(static_cast<int>(b)).degree;
        for (const auto& [d, sq] : q) {
            if (sq.quotient_dim == 0) continue;
            int d2 = X.wrap(d + bdeg);
            auto it = q.find(d2);
            Matrix tail = it == q.end() ? Matrix(f, X.dim_at(d2), 0) : it->second.projection;
            out.m.act[b][d] = sq.section * X.action(static_cast<int>(b), d) * tail;
        }
    }
    out.projection.A = X.A;
    out.projection.mod = X.mod;
    out.projection.src_dims = X.dims;
    out.projection.tgt_dims = out.m.dims;
    for (const auto& [d, sq] : q)
        if (sq.quotient_dim > 0) out.projection.comp[d] = sq.projection;
    return out;
}

GradedModule shift_module(const GradedModule& X, int i) {
    GradedModule Y = zero_module(*X.A, X.mod);
    for (const auto& [d, n] : X.dims) Y.dims[Y.wrap(d - i)] = n;
    for (std::size_t b = 0; b < X.act.size(); ++b)
        for (const auto& [d, m] : X.act[b]) Y.act[b][Y.wrap(d - i)] = m;
    return Y;
}

SubmoduleResult truncate_below(const GradedModule& X, int i) {
    if (X.mod != 0) throw TruncationUndefined("truncation needs a Z-graded module");
    std::map<int, std::vector<std::vector<Scalar>>> rows;
    const Field& f = X.A->field();
    for (const auto& [d, n] : X.dims) {
        if (d < i) continue;
        for (int r = 0; r < n; ++r) {
            std::vector<Scalar> e(n, Scalar::zero(f));
            e[r] = Scalar::one(f);
            rows[d].push_back(std::move(e));
        }
    }
    return submodule(X, rows);
}

QuotientResult truncate_above(const GradedModule& X, int i) {
    if (X.mod != 0) throw TruncationUndefined("truncation needs a Z-graded module");
    std::map<int, std::vector<std::vector<Scalar>>> rows;
    const Field& f = X.A->field();
    for (const auto& [d, n] : X.dims) {
        if (d <= i) continue;
        for (int r = 0; r < n; ++r) {
            std::vector<Scalar> e(n, Scalar::zero(f));
            e[r] = Scalar::one(f);
            rows[d].push_back(std::move(e));
        }
    }
    return quotient(X, rows);
}

GradedModule dual_module(const GradedModule& X) {
    const GradedAlgebra& Aop = X.A->op();
    GradedModule Y = zero_module(Aop, X.mod);
    for (const auto& [d, n] : X.dims) Y.dims[Y.wrap(-d)] = n;
    for (std::size_t b = 0; b < X.act.size(); ++b) {
        int k = Aop.basis_elem(static_cast<int>(b)).degree;
        for (const auto& [i, n] : Y.dims) {
            // action of b on (DX) from degree i is the transpose of the
            // action of b on X from degree -i-k
            Matrix m = X.action(static_cast<int>(b), -i - k);
            if (m.rows() == 0 && m.cols() == 0) continue;
            Y.act[b][i] = m.transpose();
        }
    }
    return Y;
}

ModuleMap double_dual_iso(const GradedModule& X) {
    // dual bases are used throughout, so evaluation is the identity matrix
    GradedModule DD = dual_module(dual_module(X));
    ModuleMap f;
    f.A = X.A;
    f.mod = X.mod;
    f.src_dims = X.dims;
    f.tgt_dims = DD.dims;
    for (const auto& [d, n] : X.dims) f.comp[d] = Matrix::identity(X.A->field(), n);
    return f;
}

GradedModule forget_to_cyclic(const GradedModule& X, int a) {
    if (a <= 0) throw GrmodError("forget_to_cyclic needs a positive modulus");
    if (X.mod != 0) throw GrmodError("forget_to_cyclic needs a Z-graded module");
    GradedModule Y = zero_module(*X.A, a);
    std::map<int, int> offset; // original degree -> first row in its residue class
    for (const auto& [d, n] : X.dims) {
        int r = Y.wrap(d);
        offset[d] = Y.dim_at(r);
        Y.dims[r] += n;
    }
    for (std::size_t b = 0; b < X.act.size(); ++b) {
        int k = X.A->basis_elem(static_cast<int>(b)).degree;
        for (const auto& [r, n] : Y.dims) {
            int r2 = Y.wrap(r + k);
            Matrix m(X.A->field(), n, Y.dim_at(r2));
            for (const auto& [d, nd] : X.dims) {
                if (Y.wrap(d) != r) continue;
                Matrix blk = X.action(static_cast<int>(b), d);
                if (blk.cols() == 0) continue;
                int roff = offset[d], coff = offset[d + k];
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (std::size_t j = 0; j < blk.cols(); ++j) m.at(roff + i, coff + j) = blk.at(i, j);
            }
            Y.act[b][r] = std::move(m);
        }
    }
    return Y;
}

bool verify_truncation_exact(const GradedModule& X, int i) {
    auto sub = truncate_below(X, i + 1);
    auto quo = truncate_above(X, i);
    // dimension bookkeeping
    for (const auto& [d, n] : X.dims)
        if (sub.m.dim_at(d) + quo.m.dim_at(d) != n) return false;
    // inclusion injective, projection surjective, composite zero, exactness
    for (const auto& [d, n] : sub.m.dims)
        if (rank(sub.inclusion.at(d)) != static_cast<std::size_t>(n)) return false;
    for (const auto& [d, n] : quo.m.dims)
        if (rank(quo.projection.at(d)) != static_cast<std::size_t>(n)) return false;
    ModuleMap comp = compose(sub.inclusion, quo.projection);
    if (!comp.is_zero()) return false;
    for (const auto& [d, n] : X.dims) {
        // kernel of projection at degree d has dimension n - dim quo = dim sub
        std::size_t kerdim = n - rank(quo.projection.at(d));
        if (kerdim != static_cast<std::size_t>(sub.m.dim_at(d))) return false;
    }
    return true;
}

} // namespace grmod
