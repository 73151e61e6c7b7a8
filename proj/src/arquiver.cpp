#include "grmod/arquiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "grmod/cover.hpp"

#include "json.hpp"

namespace grmod {

namespace {

struct Builder {
    const GradedAlgebra* A;
    int lo, hi;
    std::uint64_t seed;
    bool plain;

    std::vector<GradedModule> reps; // canonical class representatives (min degree 0)
    std::map<std::pair<int, int>, int> vertex_of; // (class, shift) -> vertex index
    std::vector<ARQuiver::Vertex> vertices;
    std::vector<int> worklist;

    int class_of(const GradedModule& piece) {
        GradedModule canon = shift_module(piece, piece.min_degree());
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (reps[c].dims != canon.dims) continue;
            if (module_isomorphism(reps[c], canon, seed).found()) return static_cast<int>(c);
        }
        reps.push_back(std::move(canon));
        if (reps.size() > 256) throw GrmodError("ar_quiver: window closure exceeds 256 classes");
        return static_cast<int>(reps.size()) - 1;
    }

    // Returns the vertex index, or -1 when the shift escapes the window.
    int place_piece(const GradedModule& piece) {
        int cls = class_of(piece);
        int shift = -piece.min_degree();
        if (shift < lo || shift > hi) return -1;
        auto key = std::make_pair(cls, shift);
        auto it = vertex_of.find(key);
        if (it != vertex_of.end()) return it->second;
        ARQuiver::Vertex v;
        v.cls = std::to_string(cls); // renamed at the end
        v.shift = shift;
        v.module = shift_module(reps[cls], shift);
        vertices.push_back(std::move(v));
        int idx = static_cast<int>(vertices.size()) - 1;
        vertex_of[key] = idx;
        worklist.push_back(idx);
        return idx;
    }

    // Places all indecomposable non-projective pieces; returns false if any
    // landed outside the window.
    bool place_all(const GradedModule& X) {
        bool inside = true;
        GradedModule s = strip_projectives(X).m;
        if (s.is_zero()) return true;
        Decomposition dec = decompose(s, seed);
        for (const auto& piece : dec.pieces)
            if (place_piece(piece) < 0) inside = false;
        return inside;
    }
};

} // namespace

ARQuiver ar_quiver(const GradedAlgebra& A, int window_lo, int window_hi, std::uint64_t seed,
                   bool plain_hom) {
    if (!plain_hom && !A.self_injectivity().self_injective)
        throw NotSelfInjective("ar_quiver needs a self-injective algebra for the stable category");
    ARQuiver out;
    if (window_lo > window_hi || A.dim() == 0) return out;

    Builder b{&A, window_lo, window_hi, seed, plain_hom, {}, {}, {}, {}};

    // seeds: simples and radicals of projectives across the window
    for (std::size_t u = 0; u < A.num_idempotents(); ++u)
        for (int j = window_lo; j <= window_hi; ++j) {
            b.place_all(simple_module(A, static_cast<int>(u), j));
            GradedModule P = indecomposable_projective(A, static_cast<int>(u), j);
            b.place_all(syzygy(simple_module(A, static_cast<int>(u), j))); // rad P via the cover of its top
            // radical of P directly
            std::map<int, std::vector<std::vector<Scalar>>> rows;
            for (const auto& r : A.radical()) {
                int rdeg = -1;
                for (std::size_t i = 0; i < r.size(); ++i)
                    if (!r[i].is_zero()) { rdeg = A.basis_elem(static_cast<int>(i)).degree; break; }
                if (rdeg < 0) continue;
                for (const auto& [d, n] : P.dims) {
                    Matrix img = P.elem_action(r, d);
                    for (std::size_t i = 0; i < img.rows(); ++i) {
                        auto row = img.row(i);
                        bool nz = false;
                        for (const auto& x : row) nz = nz || !x.is_zero();
                        if (nz) rows[d + rdeg].push_back(row);
                    }
                }
            }
            b.place_all(submodule(P, rows).m);
        }

    // closure under tau and the (co)syzygies
    while (!b.worklist.empty()) {
        int v = b.worklist.back();
        b.worklist.pop_back();
        const GradedModule X = b.vertices[v].module;
        bool inside = true;
        inside &= b.place_all(tau(X));
        inside &= b.place_all(tau_inverse(X));
        if (!plain_hom) {
            inside &= b.place_all(syzygy(X));
            inside &= b.place_all(cosyzygy(X));
        }
        if (!inside) b.vertices[v].boundary = true;
    }

    out.vertices = b.vertices;

    // deterministic class names: by total dimension (largest first), then
    // dimension signature of the representative
    {
        std::vector<int> order(b.reps.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            if (b.reps[x].total_dim() != b.reps[y].total_dim())
                return b.reps[x].total_dim() > b.reps[y].total_dim();
            return b.reps[x].dims < b.reps[y].dims;
        });
        std::vector<std::string> name(b.reps.size());
        for (std::size_t i = 0; i < order.size(); ++i) name[order[i]] = "X" + std::to_string(i + 1);
        for (auto& v : out.vertices) v.cls = name[std::stoi(v.cls)];
    }

    const std::size_t n = out.vertices.size();
    const Field& f = A.field();

    // radical of the stable (or plain) Hom between vertex modules, as
    // representative maps
    std::vector<std::vector<std::vector<ModuleMap>>> rad(n, std::vector<std::vector<ModuleMap>>(n));
    std::vector<std::vector<HomSpace>> homs(n, std::vector<HomSpace>(n));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            homs[v][w] = plain_hom ? hom0(out.vertices[v].module, out.vertices[w].module)
                                   : stable_hom0(out.vertices[v].module, out.vertices[w].module);
            const HomSpace& H = homs[v][w];
            if (v != w) {
                // all stable maps between non-isomorphic indecomposables are radical
                std::size_t want = plain_hom ? H.dim() : H.stable_dim();
                RowSpace chosen(f, H.dim());
                if (!plain_hom)
                    for (std::size_t r = 0; r < H.factoring_coords.rows(); ++r)
                        chosen.add(H.factoring_coords.row(r));
                for (std::size_t t = 0; t < H.dim() && rad[v][w].size() < want; ++t) {
                    std::vector<Scalar> e(H.dim(), Scalar::zero(f));
                    e[t] = Scalar::one(f);
                    if (chosen.add(e)) rad[v][w].push_back(H.basis[t]);
                }
            } else {
                // radical of the endomorphism ring in the stable category
                EndAlgebra E = end_algebra({out.vertices[v].module}, !plain_hom, "endv");
                for (const auto& relem : E.alg->radical()) {
                    ModuleMap m = zero_map(out.vertices[v].module, out.vertices[v].module);
                    for (std::size_t i = 0; i < relem.size(); ++i)
                        if (!relem[i].is_zero()) m = m + E.rep[i].scaled(relem[i]);
                    rad[v][w].push_back(std::move(m));
                }
            }
        }

    // arrow multiplicities: dim rad/rad^2 within the vertex set
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            if (rad[v][w].empty()) continue;
            const HomSpace& H = homs[v][w];
            RowSpace fac(f, H.dim());
            if (!plain_hom)
                for (std::size_t r = 0; r < H.factoring_coords.rows(); ++r)
                    fac.add(H.factoring_coords.row(r));
            auto stable_coords = [&](const ModuleMap& m) { return fac.reduce(H.coords_of(f, m)); };
            RowSpace radspace(f, H.dim());
            for (const auto& m : rad[v][w]) radspace.add(stable_coords(m));
            RowSpace rad2(f, H.dim());
            for (std::size_t z = 0; z < n; ++z)
                for (const auto& g : rad[v][z])
                    for (const auto& h : rad[z][w]) rad2.add(stable_coords(compose(g, h)));
            std::size_t mult = radspace.dim() - rad2.dim();
            if (mult > 0)
                out.solid.push_back({static_cast<int>(v), static_cast<int>(w), static_cast<int>(mult)});
        }

    // tau arrows
    for (std::size_t v = 0; v < n; ++v) {
        GradedModule t = strip_projectives(tau(out.vertices[v].module)).m;
        if (t.is_zero()) {
            out.vertices[v].boundary = true;
            continue;
        }
        int cls = -1, shift = -t.min_degree();
        GradedModule canon = shift_module(t, t.min_degree());
        for (std::size_t c = 0; c < b.reps.size(); ++c)
            if (b.reps[c].dims == canon.dims && module_isomorphism(b.reps[c], canon, seed).found()) {
                cls = static_cast<int>(c);
                break;
            }
        auto it = cls >= 0 ? b.vertex_of.find({cls, shift}) : b.vertex_of.end();
        if (it == b.vertex_of.end()) {
            out.vertices[v].boundary = true;
        } else {
            out.tau_arrows.emplace_back(static_cast<int>(v), it->second);
        }
    }
    return out;
}

bool verify_mesh_property(const ARQuiver& q) {
    std::map<int, int> tau_of;
    for (const auto& [v, t] : q.tau_arrows) tau_of[v] = t;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.vertices[v].boundary) continue;
        auto it = tau_of.find(static_cast<int>(v));
        if (it == tau_of.end()) continue;
        int tv = it->second;
        if (q.vertices[tv].boundary) continue;
        std::multiset<std::pair<int, int>> in_v, out_tv;
        bool sources_interior = true;
        for (const auto& e : q.solid) {
            if (e.tgt == static_cast<int>(v)) {
                in_v.insert({e.src, e.mult});
                if (q.vertices[e.src].boundary) sources_interior = false;
            }
            if (e.src == tv) out_tv.insert({e.tgt, e.mult});
        }
        if (!sources_interior) continue; // some middle term leaves the window
        if (in_v != out_tv) return false;
    }
    return true;
}

std::string emit_dot(const ARQuiver& q) {
    std::vector<std::size_t> order(q.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return q.vertices[a].label() < q.vertices[b].label();
    });
    std::ostringstream os;
    os << "digraph AR {\n";
    for (std::size_t i : order) os << "  \"" << q.vertices[i].label() << "\";\n";
    std::vector<std::tuple<std::string, std::string, int>> solid;
    for (const auto& e : q.solid)
        solid.emplace_back(q.vertices[e.src].label(), q.vertices[e.tgt].label(), e.mult);
    std::sort(solid.begin(), solid.end());
    for (const auto& [s, t, m] : solid) {
        os << "  \"" << s << "\" -> \"" << t << "\"";
        if (m > 1) os << " [label=\"" << m << "\"]";
        os << ";\n";
    }
    std::vector<std::pair<std::string, std::string>> dashed;
    for (const auto& [v, t] : q.tau_arrows)
        dashed.emplace_back(q.vertices[v].label(), q.vertices[t].label());
    std::sort(dashed.begin(), dashed.end());
    for (const auto& [s, t] : dashed)
        os << "  \"" << s << "\" -> \"" << t << "\" [style=dashed];\n";
    os << "}\n";
    return os.str();
}

std::string arquiver_json(const ARQuiver& q) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : q.vertices) {
        nlohmann::json dims = nlohmann::json::object();
        for (const auto& [d, n] : v.module.dims) dims[std::to_string(d)] = n;
        j["vertices"].push_back({{"name", v.label()},
                                 {"class", v.cls},
                                 {"shift", v.shift},
                                 {"boundary", v.boundary},
                                 {"dims", dims}});
    }
    j["arrows"] = nlohmann::json::array();
    for (const auto& e : q.solid)
        j["arrows"].push_back({{"from", q.vertices[e.src].label()},
                               {"to", q.vertices[e.tgt].label()},
                               {"mult", e.mult}});
    j["tau"] = nlohmann::json::array();
    for (const auto& [v, t] : q.tau_arrows)
        j["tau"].push_back({{"from", q.vertices[v].label()}, {"to", q.vertices[t].label()}});
    return j.dump(2) + "\n";
}

} // namespace grmod
