#include "grmod/structure.hpp"

#include <algorithm>

#include "grmod/cover.hpp"
#include "grmod/hom.hpp"

namespace grmod {

const GradedAlgebra::SelfInj& GradedAlgebra::self_injectivity() const {
    std::call_once(selfinj_once_, [this] {
        SelfInjectivity si = grmod::is_self_injective(*this);
        selfinj_.self_injective = si.self_injective;
        selfinj_.nakayama = si.nakayama;
    });
    return selfinj_;
}

SelfInjectivity is_self_injective(const GradedAlgebra& A) {
    SelfInjectivity out;
    const std::size_t k = A.num_idempotents();
    if (A.dim() == 0) {
        out.self_injective = true;
        return out;
    }
    std::vector<GradedModule> proj, inj;
    for (std::size_t u = 0; u < k; ++u) {
        proj.push_back(indecomposable_projective(A, static_cast<int>(u), 0, 1));
        inj.push_back(dual_module(indecomposable_projective(A.op(), static_cast<int>(u), 0, 1)));
    }
    // candidate matches, then a perfect matching (greedy with backtracking)
    std::vector<std::vector<int>> cand(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v)
            if (module_isomorphism(proj[u], inj[v]).found()) cand[u].push_back(static_cast<int>(v));

    std::vector<int> sigma(k, -1);
    std::vector<bool> used(k, false);
    std::function<bool(std::size_t)> match = [&](std::size_t u) {
        if (u == k) return true;
        for (int v : cand[u]) {
            if (used[v]) continue;
            used[v] = true;
            sigma[u] = v;
            if (match(u + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    if (match(0)) {
        out.self_injective = true;
        out.nakayama = sigma;
    }
    return out;
}

namespace {

// Space of symmetrizing forms beta(xy) = beta(yx), as coefficient vectors
// over the dual basis, optionally restricted to functionals supported in
// one degree.
std::vector<std::vector<Scalar>> symmetrizing_space(const GradedAlgebra& A, std::optional<int> only_degree) {
    const Field& f = A.field();
    const std::size_t n = A.dim();
    std::vector<std::vector<Scalar>> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Scalar> row(n, Scalar::zero(f));
            bool nz = false;
            for (const auto& [k, s] : A.product(static_cast<int>(i), static_cast<int>(j))) {
                row[k] += s;
                nz = true;
            }
            for (const auto& [k, s] : A.product(static_cast<int>(j), static_cast<int>(i))) {
                row[k] -= s;
                nz = true;
            }
            if (nz) eqs.push_back(std::move(row));
        }
    if (only_degree) {
        for (std::size_t i = 0; i < n; ++i) {
            if (A.basis_elem(static_cast<int>(i)).degree == *only_degree) continue;
            std::vector<Scalar> row(n, Scalar::zero(f));
            row[i] = Scalar::one(f);
            eqs.push_back(std::move(row));
        }
    }
    return kernel_basis(Matrix::from_rows(f, n, eqs));
}

bool gram_invertible(const GradedAlgebra& A, const std::vector<Scalar>& beta) {
    const Field& f = A.field();
    const std::size_t n = A.dim();
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar v = Scalar::zero(f);
            for (const auto& [k, s] : A.product(static_cast<int>(i), static_cast<int>(j))) v += s * beta[k];
            g.at(i, j) = v;
        }
    return invertible(g);
}

std::optional<std::vector<Scalar>> find_symmetrizing(const GradedAlgebra& A, std::optional<int> only_degree,
                                                     std::uint64_t seed) {
    const Field& f = A.field();
    auto space = symmetrizing_space(A, only_degree);
    if (space.empty()) return std::nullopt;
    auto combo = search_combination(f, space.size(), seed, [&](const std::vector<Scalar>& c) {
        std::vector<Scalar> beta(A.dim(), Scalar::zero(f));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t t = 0; t < A.dim(); ++t) beta[t] += c[i] * space[i][t];
        return gram_invertible(A, beta);
    });
    if (!combo) return std::nullopt;
    std::vector<Scalar> beta(A.dim(), Scalar::zero(f));
    for (std::size_t i = 0; i < combo->size(); ++i)
        for (std::size_t t = 0; t < A.dim(); ++t) beta[t] += (*combo)[i] * space[i][t];
    return beta;
}

} // namespace

bool is_symmetric(const GradedAlgebra& A, std::uint64_t seed) {
    if (A.dim() == 0) return true;
    return find_symmetrizing(A, std::nullopt, seed).has_value();
}

std::optional<std::vector<Scalar>> graded_symmetrizing_form(const GradedAlgebra& A, int l,
                                                            std::uint64_t seed) {
    return find_symmetrizing(A, l, seed);
}

std::optional<int> gorenstein_parameter(const GradedAlgebra& A) {
    if (!A.self_injectivity().self_injective)
        throw NotSelfInjective("gorenstein_parameter needs a self-injective algebra");
    std::optional<int> deg;
    for (const auto& s : A.socle()) {
        for (std::size_t i = 0; i < A.dim(); ++i) {
            if (s[i].is_zero()) continue;
            int d = A.basis_elem(static_cast<int>(i)).degree;
            if (!deg) deg = d;
            if (*deg != d) return std::nullopt;
        }
    }
    if (!deg) deg = 0; // zero or socle-free edge case
    return deg;
}

GlobalDim global_dimension(const GradedAlgebra& A, int cap) {
    GlobalDim out;
    for (std::size_t u = 0; u < A.num_idempotents(); ++u) {
        GradedModule X = simple_module(A, static_cast<int>(u), 0);
        int steps = 0;
        while (!X.is_zero()) {
            if (steps > cap) {
                out.finite = false;
                out.value = cap;
                return out;
            }
            X = syzygy(X);
            ++steps;
        }
        out.value = std::max(out.value, steps - 1);
    }
    return out;
}

} // namespace grmod
