#include "grmod/algebra.hpp"

#include <algorithm>
#include <set>

namespace grmod {

void AlgebraData::set_product(int i, int j, ProductTerms terms) {
    mult[i][j] = std::move(terms);
}

Elem GradedAlgebra::unit() const {
    Elem u = zero_elem();
    for (int e : d_.idempotents) u[e] = Scalar::one(d_.field);
    return u;
}

Elem GradedAlgebra::basis_vec(int i) const {
    Elem v = zero_elem();
    v[i] = Scalar::one(d_.field);
    return v;
}

Elem GradedAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem r = zero_elem();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (const auto& [k, s] : d_.mult[i][j]) r[k] += c * s;
        }
    }
    return r;
}

bool GradedAlgebra::is_zero_elem(const Elem& a) const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix GradedAlgebra::left_mult_matrix(const Elem& a) const {
    // coords(a * x) = x * L, i.e. row j of L = coords(a * b_j)
    Matrix L(d_.field, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& [k, s] : d_.mult[i][j]) L.at(j, k) += a[i] * s;
        }
    }
    return L;
}

Matrix GradedAlgebra::right_mult_matrix(const Elem& a) const {
    // coords(x * a) = x * R, i.e. row j of R = coords(b_j * a)
    Matrix R(d_.field, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& [k, s] : d_.mult[j][i]) R.at(j, k) += a[i] * s;
        }
    }
    return R;
}

std::map<int, int> GradedAlgebra::degree_dims() const {
    std::map<int, int> out;
    for (const auto& [d, idx] : degree_index_) out[d] = static_cast<int>(idx.size());
    return out;
}

int GradedAlgebra::max_degree() const {
    int m = 0;
    for (const auto& b : d_.basis) m = std::max(m, b.degree);
    return m;
}

bool GradedAlgebra::positively_graded() const {
    for (const auto& b : d_.basis)
        if (b.degree < 0) return false;
    return true;
}

const GradedAlgebra* GradedAlgebra::opposite_raw() const {
    return op_back_ ? op_back_ : op_store_.get();
}

void GradedAlgebra::validate() const {
    const Field& f = d_.field;
    std::set<std::string> labels;
    for (const auto& b : d_.basis) {
        if (b.label.empty() || !labels.insert(b.label).second)
            throw GrmodError("algebra '" + d_.name + "': duplicate or empty basis label '" + b.label + "'");
    }
    if (dim() == 0) return;

    // orthogonal idempotents summing to the unit
    for (std::size_t a = 0; a < d_.idempotents.size(); ++a)
        for (std::size_t b = 0; b < d_.idempotents.size(); ++b) {
            Elem p = mul(basis_vec(d_.idempotents[a]), basis_vec(d_.idempotents[b]));
            Elem expect = a == b ? basis_vec(d_.idempotents[a]) : zero_elem();
            if (p != expect) throw GrmodError("algebra '" + d_.name + "': idempotents not orthogonal");
        }
    Elem u = unit();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (mul(u, basis_vec(i)) != basis_vec(i) || mul(basis_vec(i), u) != basis_vec(i))
            throw GrmodError("algebra '" + d_.name + "': unit fails on basis element " + d_.basis[i].label);
    }

    // grading additivity and src/tgt bookkeeping
    for (std::size_t i = 0; i < dim(); ++i) {
        const BasisElem& bi = d_.basis[i];
        Elem es = basis_vec(d_.idempotents[bi.src]);
        Elem et = basis_vec(d_.idempotents[bi.tgt]);
        if (mul(es, basis_vec(i)) != basis_vec(i) || mul(basis_vec(i), et) != basis_vec(i))
            throw GrmodError("algebra '" + d_.name + "': src/tgt idempotents wrong for " + bi.label);
        for (std::size_t j = 0; j < dim(); ++j) {
            int want = bi.degree + d_.basis[j].degree;
            for (const auto& [k, s] : d_.mult[i][j]) {
                if (s.is_zero()) continue;
                int got = d_.basis[k].degree;
                bool ok = d_.grading_mod > 0
                              ? ((got - want) % d_.grading_mod + d_.grading_mod) % d_.grading_mod == 0
                              : got == want;
                if (!ok)
                    throw GrmodError("algebra '" + d_.name + "': product " + bi.label + "*" +
                                     d_.basis[j].label + " breaks the grading");
            }
        }
    }

    // associativity on all basis triples
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            Elem ij = mul(basis_vec(i), basis_vec(j));
            for (std::size_t k = 0; k < dim(); ++k) {
                Elem l = mul(ij, basis_vec(k));
                Elem r = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
                if (l != r)
                    throw GrmodError("algebra '" + d_.name + "': associativity fails at (" +
                                     d_.basis[i].label + "," + d_.basis[j].label + "," + d_.basis[k].label + ")");
            }
        }
    (void)f;
}

void GradedAlgebra::compute_generators() {
    generators_ = d_.idempotents;
    if (dim() == 0) return;
    const Field& f = d_.field;
    auto closure = [&](RowSpace& span) {
        bool grew = true;
        while (grew) {
            grew = false;
            Matrix cur = span.basis.mat;
            for (std::size_t a = 0; a < cur.rows(); ++a)
                for (std::size_t b = 0; b < cur.rows(); ++b) {
                    Elem p = mul(cur.row(a), cur.row(b));
                    if (!is_zero_elem(p) && span.add(p)) grew = true;
                }
        }
    };
    RowSpace span(f, dim());
    for (int g : generators_) span.add(basis_vec(g));
    closure(span);
    while (span.dim() < dim()) {
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!span.contains(basis_vec(static_cast<int>(i)))) {
                generators_.push_back(static_cast<int>(i));
                span.add(basis_vec(static_cast<int>(i)));
                break;
            }
        }
        closure(span);
    }
}

namespace {

// Dense integer matrices for the characteristic-p radical computation.
struct ZMat {
    std::size_t n = 0;
    std::vector<mpz_class> e;
    explicit ZMat(std::size_t n) : n(n), e(n * n, 0) {}
    mpz_class& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
    ZMat mul(const ZMat& o) const {
        ZMat r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (o.at(k, j) != 0) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }
    ZMat pow(unsigned long m) const {
        ZMat base = *this, acc(n);
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) = 1;
        while (m) {
            if (m & 1) acc = acc.mul(base);
            base = base.mul(base);
            m >>= 1;
        }
        return acc;
    }
    mpz_class trace() const {
        mpz_class t = 0;
        for (std::size_t i = 0; i < n; ++i) t += at(i, i);
        return t;
    }
};

} // namespace

std::vector<std::vector<Scalar>> radical_of_table(
    const Field& f, const std::vector<Matrix>& left_mult, std::size_t dim) {
    if (dim == 0) return {};
    if (f.kind == Field::Kind::Rational) {
        // char 0: radical = kernel of the trace form tr(L_x L_y)
        Matrix gram(f, dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Matrix p = left_mult[i] * left_mult[j];
                Scalar t = Scalar::zero(f);
                for (std::size_t k = 0; k < dim; ++k) t += p.at(k, k);
                gram.at(i, j) = t;
            }
        return kernel_basis(gram.transpose());
    }

    // char p: lifted power-trace filtration. V_{k+1} = kernel in V_k of
    // (x,y) -> Tr((Lx~ Ly~)^(p^k)) / p^k mod p on integer lifts.
    const unsigned long p = f.p;
    auto lift = [&](const std::vector<Scalar>& coords) {
        ZMat m(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            if (coords[b].is_zero()) continue;
            mpz_class c(static_cast<unsigned long>(coords[b].residue()));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    if (left_mult[b].at(i, j).is_zero()) continue;
                    m.at(i, j) += c * mpz_class(static_cast<unsigned long>(left_mult[b].at(i, j).residue()));
                }
        }
        return m;
    };

    std::vector<std::vector<Scalar>> cur;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Scalar> e(dim, Scalar::zero(f));
        e[i] = Scalar::one(f);
        cur.push_back(std::move(e));
    }
    mpz_class pk = 1; // p^k
    mpz_class pbig(p);
    for (unsigned k = 0;; ++k) {
        if (cur.empty()) break;
        std::vector<ZMat> lifted;
        lifted.reserve(cur.size());
        for (const auto& v : cur) lifted.push_back(lift(v));
        Matrix gram(f, cur.size(), cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = 0; j < cur.size(); ++j) {
                ZMat prod = lifted[i].mul(lifted[j]);
                mpz_class t = prod.pow(pk.get_ui()).trace();
                mpz_class q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), pk.get_mpz_t());
                if (r != 0) throw GrmodError("power-trace filtration: unexpected non-divisibility");
                mpz_class res = q % pbig;
                if (res < 0) res += pbig;
                gram.at(i, j) = Scalar::of_int(f, static_cast<long>(res.get_ui()));
            }
        auto ker = kernel_basis(gram.transpose());
        std::vector<std::vector<Scalar>> next;
        for (const auto& kv : ker) {
            std::vector<Scalar> w(dim, Scalar::zero(f));
            for (std::size_t j = 0; j < cur.size(); ++j)
                for (std::size_t c = 0; c < dim; ++c) w[c] += kv[j] * cur[j][c];
            next.push_back(std::move(w));
        }
        cur = std::move(next);
        if (pk.get_ui() >= dim) break;
        pk *= pbig;
    }
    return cur;
}

void GradedAlgebra::compute_radical() {
    std::vector<Matrix> lm;
    lm.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) lm.push_back(left_mult_matrix(basis_vec(static_cast<int>(i))));
    auto raw = radical_of_table(d_.field, lm, dim());
    // split into homogeneous components (the radical is a graded ideal)
    RowSpace span(d_.field, dim());
    std::vector<Elem> homog;
    for (const auto& v : raw) {
        std::map<int, Elem> parts;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (v[i].is_zero()) continue;
            auto [it, fresh] = parts.try_emplace(d_.basis[i].degree, zero_elem());
            it->second[i] = v[i];
        }
        for (auto& [deg, part] : parts)
            if (span.add(part)) homog.push_back(part);
    }
    if (span.dim() != raw.size())
        throw GrmodError("algebra '" + d_.name + "': radical is not a graded subspace");
    radical_ = std::move(homog);
}

void GradedAlgebra::compute_socle() {
    if (dim() == 0) return;
    // Soc(A_A) = { x : x * r = 0 for every radical element r }
    Matrix stacked(d_.field, dim(), 0);
    for (const auto& r : radical_) stacked = Matrix::hstack(stacked, right_mult_matrix(r));
    std::vector<std::vector<Scalar>> raw;
    if (stacked.cols() == 0) {
        for (std::size_t i = 0; i < dim(); ++i) raw.push_back(basis_vec(static_cast<int>(i)));
    } else {
        raw = kernel_basis(stacked.transpose());
    }
    RowSpace span(d_.field, dim());
    std::vector<Elem> homog;
    for (const auto& v : raw) {
        std::map<int, Elem> parts;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (v[i].is_zero()) continue;
            auto [it, fresh] = parts.try_emplace(d_.basis[i].degree, zero_elem());
            it->second[i] = v[i];
        }
        for (auto& [deg, part] : parts)
            if (span.add(part)) homog.push_back(part);
    }
    if (span.dim() != raw.size())
        throw GrmodError("algebra '" + d_.name + "': socle is not a graded subspace");
    socle_ = std::move(homog);
}

void GradedAlgebra::finalize(bool build_opposite) {
    for (std::size_t i = 0; i < dim(); ++i) degree_index_[d_.basis[i].degree].push_back(static_cast<int>(i));
    validate();
    compute_generators();
    compute_radical();
    compute_socle();

    // primitivity of the vertex idempotents: top of e_i A must be one
    // dimensional over the base field (split case)
    for (std::size_t u = 0; u < d_.idempotents.size(); ++u) {
        std::vector<int> block;
        for (std::size_t i = 0; i < dim(); ++i)
            if (d_.basis[i].src == static_cast<int>(u)) block.push_back(static_cast<int>(i));
        RowSpace rad_part(d_.field, dim());
        Elem e = basis_vec(d_.idempotents[u]);
        for (const auto& r : radical_) {
            Elem er = mul(e, r);
            if (!is_zero_elem(er)) rad_part.add(er);
        }
        if (block.size() - rad_part.dim() != 1)
            throw SplitnessWarning("algebra '" + d_.name + "': top of e_" + std::to_string(u) +
                                   "A is not one-dimensional over " + d_.field.str());
    }

    if (build_opposite) {
        AlgebraData op;
        op.field = d_.field;
        op.grading_mod = d_.grading_mod;
        op.name = d_.name + "^op";
        op.basis = d_.basis;
        for (auto& b : op.basis) std::swap(b.src, b.tgt);
        op.idempotents = d_.idempotents;
        op.mult.assign(dim(), std::vector<ProductTerms>(dim()));
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) op.mult[i][j] = d_.mult[j][i];
        auto opalg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
        opalg->d_ = std::move(op);
        opalg->op_back_ = this;
        opalg->finalize(false);
        op_store_ = std::move(opalg);
    }
}

AlgebraPtr make_algebra(AlgebraData data) {
    if (data.mult.size() != data.basis.size())
        throw GrmodError("make_algebra: multiplication table size mismatch");
    for (const auto& row : data.mult)
        if (row.size() != data.basis.size()) throw GrmodError("make_algebra: multiplication table size mismatch");
    auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    alg->d_ = std::move(data);
    alg->finalize(true);
    return alg;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    return AlgebraPtr(a, a->opposite_raw());
}

} // namespace grmod
