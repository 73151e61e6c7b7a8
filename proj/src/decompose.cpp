#include "grmod/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace grmod {

namespace {

bool map_equal(const ModuleMap& a, const ModuleMap& b) {
    for (const auto& [d, n] : a.src_dims)
        if (!(a.at(d) == b.at(d))) return false;
    return true;
}

// Quotient algebra S = End/rad on explicit coordinates, with products
// computed through representatives in the hom basis.
struct EndQuotient {
    const GradedModule* X;
    const HomSpace* H;
    SubspaceQuotient q;
    std::size_t dim = 0;

    ModuleMap rep_of_end(const std::vector<Scalar>& end_coords) const {
        ModuleMap m = zero_map(*X, *X);
        for (std::size_t i = 0; i < end_coords.size(); ++i)
            if (!end_coords[i].is_zero()) m = m + H->basis[i].scaled(end_coords[i]);
        return m;
    }
    std::vector<Scalar> to_end(const std::vector<Scalar>& s_coords) const {
        std::vector<Scalar> v(H->dim(), Scalar::zero(X->A->field()));
        Matrix row = Matrix::from_rows(X->A->field(), dim, {s_coords}) * q.section;
        for (std::size_t i = 0; i < H->dim(); ++i) v[i] = row.at(0, i);
        return v;
    }
    std::vector<Scalar> project(const std::vector<Scalar>& end_coords) const {
        Matrix row = Matrix::from_rows(X->A->field(), H->dim(), {end_coords}) * q.projection;
        std::vector<Scalar> v(dim, Scalar::zero(X->A->field()));
        for (std::size_t i = 0; i < dim; ++i) v[i] = row.at(0, i);
        return v;
    }
    std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
        // a*b = a o b (b applied first)
        ModuleMap m = compose(rep_of_end(to_end(b)), rep_of_end(to_end(a)));
        return project(H->coords_of(X->A->field(), m));
    }
    std::vector<Scalar> unit() const {
        return project(H->coords_of(X->A->field(), identity_map(*X)));
    }
};

// Monic minimal polynomial coefficients (c_0 .. c_{k-1}, then x^k).
std::vector<Scalar> min_poly(const EndQuotient& S, const std::vector<Scalar>& s) {
    const Field& f = S.X->A->field();
    std::vector<std::vector<Scalar>> powers{S.unit()};
    RowSpace span(f, S.dim);
    span.add(powers[0]);
    std::vector<Scalar> cur = powers[0];
    while (true) {
        cur = S.mul(cur, s);
        if (span.contains(cur)) {
            auto coords = coordinates_in_rowspace(
                Matrix::from_rows(f, S.dim, powers), cur);
            if (!coords) throw GrmodError("min_poly: dependence not solvable");
            return *coords; // x^k = sum coords[i] x^i
        }
        span.add(cur);
        powers.push_back(cur);
    }
}

std::vector<Scalar> rational_root_candidates(const Field& f, const std::vector<Scalar>& mp) {
    std::vector<Scalar> out;
    if (f.kind == Field::Kind::Prime) {
        std::uint64_t limit = std::min<std::uint64_t>(f.p, 4096);
        for (std::uint64_t r = 0; r < limit; ++r) out.push_back(Scalar::of_int(f, static_cast<long>(r)));
        return out;
    }
    // integer-scaled coefficients; candidates p/q from small divisors
    mpz_class lcm = 1;
    for (const auto& c : mp) {
        mpz_class den = c.rat().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    mpz_class a0 = mp.empty() ? mpz_class(0) : mpz_class(mp[0].rat() * lcm);
    mpz_class ak = lcm; // monic scaled by lcm
    auto small_divisors = [](const mpz_class& v) {
        std::vector<long> ds{1};
        mpz_class a = abs(v);
        for (long d = 2; d <= 1000; ++d)
            if (a != 0 && mpz_divisible_ui_p(a.get_mpz_t(), d)) ds.push_back(d);
        return ds;
    };
    std::vector<long> ps = small_divisors(a0), qs = small_divisors(ak);
    std::set<std::pair<long, long>> seen;
    auto push = [&](long p, long q) {
        long g = std::gcd(p < 0 ? -p : p, q);
        p /= g;
        q /= g;
        if (seen.insert({p, q}).second) out.push_back(Scalar::of_mpq(f, mpq_class(p, q)));
    };
    push(0, 1);
    for (long p : ps)
        for (long q : qs) {
            push(p, q);
            push(-p, q);
        }
    for (long v = 1; v <= 3; ++v) {
        push(v, 1);
        push(-v, 1);
    }
    return out;
}

Scalar eval_poly(const Field& f, const std::vector<Scalar>& coeffs, const Scalar& x) {
    // coeffs c_0..c_{m}, value sum c_i x^i
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// Finds a nontrivial idempotent in End/rad, or nullopt.
std::optional<std::vector<Scalar>> semisimple_idempotent(const EndQuotient& S, std::uint64_t seed) {
    const Field& f = S.X->A->field();
    if (S.dim <= 1) return std::nullopt;

    auto try_element = [&](const std::vector<Scalar>& s) -> std::optional<std::vector<Scalar>> {
        auto mp = min_poly(S, s); // x^k = sum mp[i] x^i
        std::size_t k = mp.size();
        if (k <= 1) return std::nullopt;
        // monic polynomial coefficients mu_0..mu_k
        std::vector<Scalar> mu(k + 1, Scalar::zero(f));
        for (std::size_t i = 0; i < k; ++i) mu[i] = -mp[i];
        mu[k] = Scalar::one(f);
        for (const auto& lambda : rational_root_candidates(f, mu)) {
            if (!eval_poly(f, mu, lambda).is_zero()) continue;
            // synthetic division by (x - lambda)
            std::vector<Scalar> g(k, Scalar::zero(f));
            Scalar carry = Scalar::zero(f);
            for (std::size_t i = k + 1; i-- > 1;) {
                g[i - 1] = mu[i] + carry;
                carry = g[i - 1] * lambda;
            }
            Scalar gl = eval_poly(f, g, lambda);
            if (gl.is_zero()) continue; // repeated root; semisimple part elsewhere
            // e = g(s)/g(lambda): 1 at lambda, 0 on the cofactor
            std::vector<Scalar> e(S.dim, Scalar::zero(f));
            std::vector<Scalar> power = S.unit();
            for (std::size_t i = 0; i < g.size(); ++i) {
                Scalar c = g[i] / gl;
                for (std::size_t t = 0; t < S.dim; ++t) e[t] += c * power[t];
                if (i + 1 < g.size()) power = S.mul(power, s);
            }
            auto is_zero = [&](const std::vector<Scalar>& v) {
                for (const auto& c : v)
                    if (!c.is_zero()) return false;
                return true;
            };
            std::vector<Scalar> e2 = S.mul(e, e);
            std::vector<Scalar> diff(S.dim, Scalar::zero(f));
            for (std::size_t t = 0; t < S.dim; ++t) diff[t] = e2[t] - e[t];
            if (!is_zero(diff)) continue;
            std::vector<Scalar> one = S.unit(), commp(S.dim, Scalar::zero(f));
            for (std::size_t t = 0; t < S.dim; ++t) commp[t] = one[t] - e[t];
            if (is_zero(e) || is_zero(commp)) continue;
            return e;
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < S.dim; ++i) {
        std::vector<Scalar> s(S.dim, Scalar::zero(f));
        s[i] = Scalar::one(f);
        if (auto e = try_element(s)) return e;
    }
    std::mt19937_64 rng(seed ^ 0x51ab1e5eedULL);
    for (int trial = 0; trial < 64; ++trial) {
        std::vector<Scalar> s(S.dim, Scalar::zero(f));
        for (std::size_t i = 0; i < S.dim; ++i) {
            long c = f.kind == Field::Kind::Rational ? static_cast<long>(rng() % 7) - 3
                                                     : static_cast<long>(rng() % f.p);
            s[i] = Scalar::of_int(f, c);
        }
        if (auto e = try_element(s)) return e;
    }
    return std::nullopt;
}

struct SplitAttempt {
    bool local = false;        // End/rad one dimensional
    bool split_found = false;  // parts valid
    GradedModule left, right;
};

SplitAttempt try_split(const GradedModule& X, std::uint64_t seed) {
    SplitAttempt out;
    const Field& f = X.A->field();
    HomSpace H = hom0(X, X);
    auto rad = end_radical(X, H);
    if (H.dim() - rad.size() == 1) {
        out.local = true;
        return out;
    }
    EndQuotient S;
    S.X = &X;
    S.H = &H;
    S.q = subspace_quotient(f, H.dim(), rad);
    S.dim = S.q.quotient_dim;

    auto ebar = semisimple_idempotent(S, seed);
    if (!ebar) return out;

    // lift through the radical: e <- 3e^2 - 2e^3
    ModuleMap e = S.rep_of_end(S.to_end(*ebar));
    for (int it = 0; it < 64; ++it) {
        ModuleMap e2 = compose(e, e);
        if (map_equal(e2, e)) break;
        ModuleMap e3 = compose(e2, e);
        e = e2.scaled(Scalar::of_int(f, 3)) + e3.scaled(Scalar::of_int(f, -2));
        if (it == 63) throw GrmodError("idempotent lifting did not converge");
    }
    if (!map_equal(compose(e, e), e)) throw GrmodError("idempotent lifting did not converge");

    std::map<int, std::vector<std::vector<Scalar>>> img, ker;
    for (const auto& [d, n] : X.dims) {
        Matrix m = e.at(d);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            auto row = m.row(r);
            bool nz = false;
            for (const auto& c : row) nz = nz || !c.is_zero();
            if (nz) img[d].push_back(row);
        }
        for (const auto& v : kernel_basis(m.transpose())) ker[d].push_back(v);
    }
    out.left = submodule(X, img).m;
    out.right = submodule(X, ker).m;
    if (out.left.is_zero() || out.right.is_zero())
        throw GrmodError("idempotent split produced a trivial part");
    out.split_found = true;
    return out;
}

} // namespace

std::vector<std::vector<Scalar>> end_radical(const GradedModule& X, const HomSpace& H) {
    const Field& f = X.A->field();
    std::vector<Matrix> lm;
    for (std::size_t i = 0; i < H.dim(); ++i) {
        Matrix L(f, H.dim(), H.dim());
        for (std::size_t j = 0; j < H.dim(); ++j) {
            // row j = coords of h_i * h_j = h_i o h_j
            auto coords = H.coords_of(f, compose(H.basis[j], H.basis[i]));
            for (std::size_t k = 0; k < H.dim(); ++k) L.at(j, k) = coords[k];
        }
        lm.push_back(std::move(L));
    }
    return radical_of_table(f, lm, H.dim());
}

bool is_indecomposable(const GradedModule& X, std::uint64_t seed) {
    if (X.is_zero()) throw GrmodError("is_indecomposable: zero module");
    SplitAttempt a = try_split(X, seed);
    if (a.local) return true;
    if (a.split_found) return false;
    throw SplitnessWarning("End/rad has dimension > 1 and no idempotent was found over " +
                           X.A->field().str());
}

Decomposition decompose(const GradedModule& X, std::uint64_t seed) {
    Decomposition out;
    std::vector<GradedModule> queue;
    if (!X.is_zero()) queue.push_back(X);
    while (!queue.empty()) {
        GradedModule Y = std::move(queue.back());
        queue.pop_back();
        SplitAttempt a = try_split(Y, seed);
        if (a.split_found) {
            queue.push_back(std::move(a.left));
            queue.push_back(std::move(a.right));
            continue;
        }
        if (!a.local)
            throw SplitnessWarning("decompose: End/rad has dimension > 1 and no idempotent was found");
        out.pieces.push_back(std::move(Y));
    }
    // group by isomorphism, deterministically ordered by (dim, signature)
    std::stable_sort(out.pieces.begin(), out.pieces.end(), [](const GradedModule& a, const GradedModule& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return a.dims < b.dims;
    });
    for (const auto& p : out.pieces) {
        bool matched = false;
        for (std::size_t i = 0; i < out.factors.size(); ++i) {
            if (module_isomorphism(out.factors[i], p, seed).found()) {
                ++out.multiplicities[i];
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.factors.push_back(p);
            out.multiplicities.push_back(1);
        }
    }
    return out;
}

} // namespace grmod
