#include "grmod/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grmod {

int Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw ParseError("unknown vertex '" + label + "'");
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (v.empty() || !seen.insert(v).second) throw ParseError("duplicate or empty vertex label");
    std::set<std::string> anames;
    for (const auto& a : arrows) {
        if (a.name.empty() || !anames.insert(a.name).second)
            throw ParseError("duplicate or empty arrow name '" + a.name + "'");
        if (a.from < 0 || a.from >= static_cast<int>(vertices.size()) || a.to < 0 ||
            a.to >= static_cast<int>(vertices.size()))
            throw ParseError("arrow '" + a.name + "' references an unknown vertex");
    }
}

namespace {

struct Path {
    int src, tgt, degree;
    std::vector<int> arrows; // empty = trivial path at src
};

std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e" + q.vertices[p.src];
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

} // namespace

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels, const Field& field,
                         int max_path_length, const std::string& name) {
    q.validate();
    if (max_path_length < 1) throw GrmodError("build_algebra: max_path_length must be >= 1");
    const int L = max_path_length;

    // homogeneity of the relations: parallel paths, equal degree
    struct RelInfo {
        int src, tgt, degree;
    };
    std::vector<RelInfo> rinfo;
    for (const auto& rel : rels) {
        if (rel.terms.empty()) throw InhomogeneousRelation("empty relation");
        RelInfo info{-1, -1, 0};
        for (const auto& t : rel.terms) {
            if (t.path.empty()) throw InhomogeneousRelation("relation term with an empty path");
            int src = q.arrows[t.path.front()].from;
            int tgt = q.arrows[t.path.back()].to;
            int deg = 0;
            for (std::size_t i = 0; i < t.path.size(); ++i) {
                deg += q.arrows[t.path[i]].degree;
                if (i + 1 < t.path.size() && q.arrows[t.path[i]].to != q.arrows[t.path[i + 1]].from)
                    throw InhomogeneousRelation("relation term is not a composable path");
            }
            if (info.src < 0) {
                info = {src, tgt, deg};
            } else if (info.src != src || info.tgt != tgt || info.degree != deg) {
                throw InhomogeneousRelation("relation terms are not parallel of equal degree");
            }
        }
        rinfo.push_back(info);
    }

    // enumerate paths of length <= L
    std::vector<Path> paths;
    std::map<std::vector<int>, int> path_id; // arrows -> index (trivials keyed by {-1-v})
    std::vector<std::vector<int>> by_length(L + 1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        paths.push_back({static_cast<int>(v), static_cast<int>(v), 0, {}});
        path_id[{-1 - static_cast<int>(v)}] = static_cast<int>(paths.size()) - 1;
        by_length[0].push_back(static_cast<int>(paths.size()) - 1);
    }
    for (int len = 1; len <= L; ++len) {
        for (int pid : by_length[len - 1]) {
            Path base = paths[pid];
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].from != base.tgt) continue;
                Path ext = base;
                ext.arrows.push_back(static_cast<int>(a));
                ext.tgt = q.arrows[a].to;
                ext.degree += q.arrows[a].degree;
                paths.push_back(ext);
                path_id[ext.arrows] = static_cast<int>(paths.size()) - 1;
                by_length[len].push_back(static_cast<int>(paths.size()) - 1);
            }
        }
    }

    auto lookup = [&](const std::vector<int>& arrows, int vertex_if_trivial) -> int {
        if (arrows.empty()) return path_id.at({-1 - vertex_if_trivial});
        auto it = path_id.find(arrows);
        return it == path_id.end() ? -1 : it->second;
    };

    // block structure: (src, tgt, degree)
    using Key = std::tuple<int, int, int>;
    std::map<Key, std::vector<int>> blocks; // block -> path ids (order: length, then id)
    for (std::size_t i = 0; i < paths.size(); ++i)
        blocks[{paths[i].src, paths[i].tgt, paths[i].degree}].push_back(static_cast<int>(i));
    for (auto& [k, v] : blocks)
        std::sort(v.begin(), v.end(), [&](int a, int b) {
            if (paths[a].arrows.size() != paths[b].arrows.size())
                return paths[a].arrows.size() < paths[b].arrows.size();
            return a < b;
        });
    std::map<int, int> pos_in_block;
    for (const auto& [k, v] : blocks)
        for (std::size_t i = 0; i < v.size(); ++i) pos_in_block[v[i]] = static_cast<int>(i);

    // ideal span per block: u * rel * v over all composable path pairs
    std::map<Key, std::vector<std::vector<Scalar>>> span;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const RelInfo& info = rinfo[ri];
        int max_term = 0;
        for (const auto& t : rels[ri].terms) max_term = std::max<int>(max_term, t.path.size());
        for (std::size_t up = 0; up < paths.size(); ++up) {
            if (paths[up].tgt != info.src) continue;
            for (std::size_t vp = 0; vp < paths.size(); ++vp) {
                if (paths[vp].src != info.tgt) continue;
                if (static_cast<int>(paths[up].arrows.size() + paths[vp].arrows.size()) + max_term > L) continue;
                Key key{paths[up].src, paths[vp].tgt, paths[up].degree + info.degree + paths[vp].degree};
                const auto& blk = blocks.at(key);
                std::vector<Scalar> row(blk.size(), Scalar::zero(field));
                bool nz = false;
                for (const auto& t : rels[ri].terms) {
                    std::vector<int> whole = paths[up].arrows;
                    whole.insert(whole.end(), t.path.begin(), t.path.end());
                    whole.insert(whole.end(), paths[vp].arrows.begin(), paths[vp].arrows.end());
                    int pid = lookup(whole, -1);
                    if (pid < 0) throw GrmodError("build_algebra: internal path lookup failure");
                    row[pos_in_block.at(pid)] += t.coeff;
                    nz = true;
                }
                if (nz) span[key].push_back(std::move(row));
            }
        }
    }

    // reduce blockwise; basis = non-pivot paths; the cap is adequate iff
    // every path of length exactly L lies in the span
    std::map<Key, RowSpace> reduced;
    for (const auto& [key, rows] : span) {
        RowSpace rs(field, blocks.at(key).size(), rows);
        reduced.emplace(key, std::move(rs));
    }
    auto in_ideal = [&](int pid) {
        Key key{paths[pid].src, paths[pid].tgt, paths[pid].degree};
        auto it = reduced.find(key);
        if (it == reduced.end()) return false;
        std::vector<Scalar> e(blocks.at(key).size(), Scalar::zero(field));
        e[pos_in_block.at(pid)] = Scalar::one(field);
        return it->second.contains(e);
    };
    for (int pid : by_length[L])
        if (!in_ideal(pid))
            throw NonNilpotent("path '" + path_label(q, paths[pid]) + "' of length " + std::to_string(L) +
                               " survives the relation ideal (raise max_path_length, or the algebra is "
                               "infinite dimensional)");

    // surviving basis: non-pivot paths per block
    std::map<Key, std::vector<int>> survivors; // block -> positions
    std::vector<int> basis_of_path(paths.size(), -1);
    std::vector<int> chosen; // path ids, in block order
    for (const auto& [key, blk] : blocks) {
        std::set<std::size_t> pivots;
        auto it = reduced.find(key);
        if (it != reduced.end())
            for (auto p : it->second.basis.pivots) pivots.insert(p);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (pivots.count(i)) continue;
            if (paths[blk[i]].arrows.size() == static_cast<std::size_t>(L))
                throw NonNilpotent("length-cap path survives the quotient");
            survivors[key].push_back(static_cast<int>(i));
            basis_of_path[blk[i]] = static_cast<int>(chosen.size());
            chosen.push_back(blk[i]);
        }
    }

    // class of a path in the surviving basis
    auto reduce_path = [&](int pid) {
        Key key{paths[pid].src, paths[pid].tgt, paths[pid].degree};
        const auto& blk = blocks.at(key);
        std::vector<Scalar> e(blk.size(), Scalar::zero(field));
        e[pos_in_block.at(pid)] = Scalar::one(field);
        auto it = reduced.find(key);
        std::vector<Scalar> r = it == reduced.end() ? e : it->second.reduce(e);
        ProductTerms terms;
        for (std::size_t i = 0; i < blk.size(); ++i)
            if (!r[i].is_zero()) {
                int b = basis_of_path[blk[i]];
                if (b < 0) throw GrmodError("build_algebra: residue on a pivot path");
                terms.emplace_back(b, r[i]);
            }
        return terms;
    };

    AlgebraData data;
    data.field = field;
    data.name = name.empty() ? "KQ/I" : name;
    for (int pid : chosen) {
        BasisElem e;
        e.label = path_label(q, paths[pid]);
        e.degree = paths[pid].degree;
        e.src = paths[pid].src;
        e.tgt = paths[pid].tgt;
        data.basis.push_back(std::move(e));
    }
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        int pid = lookup({}, static_cast<int>(v));
        if (basis_of_path[pid] < 0) throw GrmodError("build_algebra: a vertex idempotent died in the quotient");
        data.idempotents.push_back(basis_of_path[pid]);
    }
    data.mult.assign(chosen.size(), std::vector<ProductTerms>(chosen.size()));
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            const Path& p = paths[chosen[i]];
            const Path& r = paths[chosen[j]];
            if (p.tgt != r.src) continue;
            if (static_cast<int>(p.arrows.size() + r.arrows.size()) >= L + 1) continue; // in the ideal
            std::vector<int> whole = p.arrows;
            whole.insert(whole.end(), r.arrows.begin(), r.arrows.end());
            int pid = lookup(whole, p.src);
            if (pid < 0) throw GrmodError("build_algebra: concatenation not enumerated");
            data.mult[i][j] = reduce_path(pid);
        }
    return make_algebra(std::move(data));
}

AlgebraPtr path_algebra(const Quiver& q, const Field& field, const std::string& name) {
    return build_algebra(q, {}, field, static_cast<int>(q.vertices.size()), name);
}

Quiver linear_quiver(int n) {
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i - 1, i, 0});
    return q;
}

AlgebraPtr preprojective_algebra(const Quiver& q, const Field& field, int cap, bool flip_signs,
                                 const std::string& name) {
    q.validate();
    for (const auto& a : q.arrows)
        if (a.degree != 0) throw GrmodError("preprojective_algebra: base quiver arrows must have degree 0");
    Quiver dq = q;
    const int n_orig = static_cast<int>(q.arrows.size());
    for (int a = 0; a < n_orig; ++a)
        dq.arrows.push_back({q.arrows[a].name + "*", q.arrows[a].to, q.arrows[a].from, 1});

    std::vector<Relation> rels(q.vertices.size());
    for (int a = 0; a < n_orig; ++a) {
        int star = n_orig + a;
        Scalar plus = Scalar::of_int(field, flip_signs ? -1 : 1);
        Scalar minus = -plus;
        // alpha alpha* starts at the source of alpha; alpha* alpha at its target
        rels[q.arrows[a].from].terms.push_back({plus, {a, star}});
        rels[q.arrows[a].to].terms.push_back({minus, {star, a}});
    }
    std::vector<Relation> nonempty;
    for (auto& r : rels)
        if (!r.terms.empty()) nonempty.push_back(std::move(r));

    if (cap <= 0) cap = 2 * static_cast<int>(q.vertices.size());
    return build_algebra(dq, nonempty, field, cap, name.empty() ? "Pi" : name);
}

AlgebraPtr trivial_extension(const GradedAlgebra& lambda, const std::string& name) {
    const GradedAlgebra& L = lambda;
    if (L.max_degree() != 0 || !L.positively_graded())
        throw GrmodError("trivial_extension needs an algebra concentrated in degree 0");
    const Field& f = L.field();
    const int n = static_cast<int>(L.dim());

    AlgebraData d;
    d.field = f;
    d.name = name.empty() ? "triv(" + L.name() + ")" : name;
    for (int i = 0; i < n; ++i) {
        BasisElem e = L.basis_elem(i);
        d.basis.push_back(e);
    }
    for (int i = 0; i < n; ++i) {
        BasisElem e = L.basis_elem(i);
        e.label += "^";
        e.degree = 1;
        std::swap(e.src, e.tgt);
        d.basis.push_back(e);
    }
    for (int u : L.idempotents()) d.idempotents.push_back(u);

    d.mult.assign(2 * n, std::vector<ProductTerms>(2 * n));
    auto coeff_of = [&](int i, int j, int k) { // coefficient of b_k in b_i b_j
        for (const auto& [t, s] : L.product(i, j))
            if (t == k) return s;
        return Scalar::zero(f);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // (b_i, 0)(b_j, 0) = (b_i b_j, 0)
            d.mult[i][j] = L.product(i, j);
            // (b_i, 0)(0, b_j*) = (0, b_i . b_j*), (b_i . b_j*)(z) = b_j*(z b_i)
            ProductTerms left;
            for (int t = 0; t < n; ++t) {
                Scalar c = coeff_of(t, i, j);
                if (!c.is_zero()) left.emplace_back(n + t, c);
            }
            d.mult[i][n + j] = std::move(left);
            // (0, b_i*)(b_j, 0) = (0, b_i* . b_j), (b_i* . b_j)(z) = b_i*(b_j z)
            ProductTerms right;
            for (int t = 0; t < n; ++t) {
                Scalar c = coeff_of(j, t, i);
                if (!c.is_zero()) right.emplace_back(n + t, c);
            }
            d.mult[n + i][j] = std::move(right);
            // duals multiply to zero
        }
    return make_algebra(std::move(d));
}

std::vector<std::tuple<int, int, int>> beilinson_slots(const GradedAlgebra& A, int l) {
    std::vector<std::tuple<int, int, int>> slots;
    for (int r = 0; r < l; ++r)
        for (int c = r; c < l; ++c) {
            auto it = A.degree_index().find(c - r);
            if (it == A.degree_index().end()) continue;
            for (int e : it->second) slots.emplace_back(r, c, e);
        }
    return slots;
}

AlgebraPtr beilinson_algebra(const GradedAlgebra& A, int l, const std::string& name) {
    const GradedAlgebra& a = A;
    if (l < 0) throw GrmodError("beilinson_algebra: negative size");
    const Field& f = a.field();
    AlgebraData d;
    d.field = f;
    d.name = name.empty() ? "B(" + a.name() + "," + std::to_string(l) + ")" : name;

    struct Slot {
        int r, c, elem;
    };
    std::vector<Slot> slots;
    std::map<std::tuple<int, int, int>, int> index;
    for (const auto& [r, c, e] : beilinson_slots(a, l)) {
        index[{r, c, e}] = static_cast<int>(slots.size());
        slots.push_back({r, c, e});
    }
    for (const auto& s : slots) {
        BasisElem e;
        e.label = a.basis_elem(s.elem).label + "[" + std::to_string(s.r) + "," + std::to_string(s.c) + "]";
        e.degree = 0;
        // src/tgt ordinals: pair (block row, vertex) flattened as r * k + vertex
        e.src = s.r * static_cast<int>(a.num_idempotents()) + a.basis_elem(s.elem).src;
        e.tgt = s.c * static_cast<int>(a.num_idempotents()) + a.basis_elem(s.elem).tgt;
        d.basis.push_back(std::move(e));
    }
    for (int r = 0; r < l; ++r)
        for (std::size_t u = 0; u < a.num_idempotents(); ++u)
            d.idempotents.push_back(index.at({r, r, a.idempotents()[u]}));

    d.mult.assign(slots.size(), std::vector<ProductTerms>(slots.size()));
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = 0; j < slots.size(); ++j) {
            if (slots[i].c != slots[j].r) continue;
            ProductTerms terms;
            for (const auto& [k, s] : a.product(slots[i].elem, slots[j].elem)) {
                auto it = index.find({slots[i].r, slots[j].c, k});
                if (it == index.end()) throw GrmodError("beilinson_algebra: product escapes the blocks");
                terms.emplace_back(it->second, s);
            }
            d.mult[i][j] = std::move(terms);
        }
    return make_algebra(std::move(d));
}

AlgebraPtr nakayama_algebra(int vertices, int nilpotency, const Field& field, const std::string& name) {
    if (vertices < 1 || nilpotency < 1) throw GrmodError("nakayama_algebra: bad parameters");
    Quiver q;
    for (int i = 1; i <= vertices; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < vertices; ++i)
        q.arrows.push_back({"x" + std::to_string(i + 1), i, (i + 1) % vertices, 1});
    std::vector<Relation> rels;
    for (int start = 0; start < vertices; ++start) {
        Relation r;
        RelationTerm t;
        t.coeff = Scalar::one(field);
        for (int k = 0; k < nilpotency; ++k) t.path.push_back((start + k) % vertices);
        r.terms.push_back(std::move(t));
        rels.push_back(std::move(r));
    }
    return build_algebra(q, rels, field, nilpotency + 1,
                         name.empty() ? "N(" + std::to_string(vertices) + "," + std::to_string(nilpotency) + ")"
                                      : name);
}

AlgebraPtr exterior_style_algebra(int n, const Field& field, const std::string& name) {
    if (n < 1) throw GrmodError("exterior_style_algebra: n must be >= 1");
    Quiver q;
    q.vertices.push_back("1");
    for (int i = 1; i <= n; ++i) q.arrows.push_back({"x" + std::to_string(i), 0, 0, 1});
    std::vector<Relation> rels;
    for (int i = 0; i < n; ++i) {
        Relation r;
        r.terms.push_back({Scalar::one(field), {i, i}});
        rels.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Relation r;
            r.terms.push_back({Scalar::one(field), {i, j}});
            r.terms.push_back({-Scalar::one(field), {j, i}});
            rels.push_back(std::move(r));
        }
    return build_algebra(q, rels, field, n + 1,
                         name.empty() ? "K[x1..x" + std::to_string(n) + "]/(xi^2)" : name);
}

} // namespace grmod
