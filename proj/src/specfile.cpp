#include "grmod/specfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace grmod {

using nlohmann::json;

namespace {

Scalar parse_coeff(const Field& f, const std::string& text) {
    auto pos = text.find(" mod ");
    if (pos == std::string::npos) return Scalar::parse(f, text);
    if (f.kind != Field::Kind::Prime)
        throw ParseError("coefficient '" + text + "' uses 'mod' over the rationals");
    std::string num = text.substr(0, pos), mod = text.substr(pos + 5);
    unsigned long p = std::stoul(mod);
    if (p != f.p)
        throw ParseError("coefficient modulus " + mod + " disagrees with the field F" + std::to_string(f.p));
    return Scalar::parse(f, num);
}

Field parse_field_json(const json& j) {
    if (!j.is_object() || !j.contains("type")) throw ParseError("field: expected {\"type\": ...}");
    std::string t = j.at("type").get<std::string>();
    if (t == "rational") return Field::rationals();
    if (t == "prime") {
        if (!j.contains("p")) throw ParseError("field: prime field needs \"p\"");
        return Field::prime(j.at("p").get<std::uint64_t>());
    }
    throw ParseError("field: unknown type '" + t + "'");
}

Quiver parse_quiver(const json& j) {
    Quiver q;
    if (!j.contains("vertices") || !j.contains("arrows"))
        throw ParseError("quiver: expected \"vertices\" and \"arrows\"");
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows")) {
        Arrow ar;
        ar.name = a.at("name").get<std::string>();
        ar.from = q.vertex_index(a.at("from").get<std::string>());
        ar.to = q.vertex_index(a.at("to").get<std::string>());
        ar.degree = a.value("degree", 0);
        q.arrows.push_back(std::move(ar));
    }
    q.validate();
    return q;
}

AlgebraSpec parse_spec(const json& j, std::optional<Field> field_override,
                       std::optional<int> cap_override);

AlgebraSpec parse_builtin(const json& j, const Field& f, std::optional<Field> field_override,
                          std::optional<int> cap_override) {
    AlgebraSpec out;
    if (j.contains("trivial_extension_of")) {
        AlgebraSpec inner = parse_spec(j.at("trivial_extension_of"), field_override, cap_override);
        out.algebra = trivial_extension(*inner.algebra);
        out.source_name = "triv(" + inner.source_name + ")";
        return out;
    }
    if (j.contains("preprojective_of")) {
        Quiver q = parse_quiver(j.at("preprojective_of"));
        int cap = cap_override ? *cap_override : 0;
        out.algebra = preprojective_algebra(q, f, cap, j.value("flip_signs", false));
        out.preprojective_quiver = q;
        out.source_name = "preprojective";
        return out;
    }
    if (j.contains("nakayama")) {
        const json& n = j.at("nakayama");
        int loops = n.value("loop_length", 1);
        int nil = n.at("nilpotency").get<int>();
        out.algebra = nakayama_algebra(loops, nil, f);
        out.source_name = "nakayama";
        return out;
    }
    throw ParseError("builtin: expected one of trivial_extension_of, preprojective_of, nakayama");
}

AlgebraSpec parse_spec(const json& j, std::optional<Field> field_override,
                       std::optional<int> cap_override) {
    if (!j.is_object()) throw ParseError("algebra spec: expected a JSON object");
    Field f = field_override ? *field_override
                             : (j.contains("field") ? parse_field_json(j.at("field")) : Field::rationals());
    bool has_quiver = j.contains("quiver");
    bool has_builtin = j.contains("builtin");
    if (has_quiver == has_builtin)
        throw ParseError("algebra spec: exactly one of \"quiver\" or \"builtin\" must be present");
    if (has_builtin) return parse_builtin(j.at("builtin"), f, field_override, cap_override);

    Quiver q = parse_quiver(j.at("quiver"));
    std::vector<Relation> rels;
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            Relation rel;
            for (const auto& t : r.at("terms")) {
                RelationTerm term;
                term.coeff = parse_coeff(f, t.at("coeff").get<std::string>());
                for (const auto& an : t.at("path")) {
                    std::string name = an.get<std::string>();
                    int idx = -1;
                    for (std::size_t a = 0; a < q.arrows.size(); ++a)
                        if (q.arrows[a].name == name) idx = static_cast<int>(a);
                    if (idx < 0) throw ParseError("relation path uses unknown arrow '" + name + "'");
                    term.path.push_back(idx);
                }
                rel.terms.push_back(std::move(term));
            }
            rels.push_back(std::move(rel));
        }
    }
    if (!j.contains("max_path_length")) throw ParseError("algebra spec: missing \"max_path_length\"");
    int cap = cap_override ? *cap_override : j.at("max_path_length").get<int>();
    AlgebraSpec out;
    out.algebra = build_algebra(q, rels, f, cap, j.value("name", std::string{}));
    out.source_name = j.value("name", std::string("KQ/I"));
    return out;
}

} // namespace

AlgebraSpec parse_algebra_spec_text(const std::string& text, std::optional<Field> field_override,
                                    std::optional<int> cap_override) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return parse_spec(j, field_override, cap_override);
}

AlgebraSpec load_algebra_spec(const std::string& path, std::optional<Field> field_override,
                              std::optional<int> cap_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_spec_text(ss.str(), field_override, cap_override);
}

Field parse_field_flag(const std::string& text) {
    if (text == "rational") return Field::rationals();
    if (text.rfind("p=", 0) == 0) return Field::prime(std::stoull(text.substr(2)));
    throw ParseError("--field expects 'rational' or 'p=PRIME'");
}

std::string algebra_json(const GradedAlgebra& A) {
    json j;
    j["name"] = A.name();
    j["field"] = A.field().kind == Field::Kind::Rational
                     ? json{{"type", "rational"}}
                     : json{{"type", "prime"}, {"p", A.field().p}};
    j["dim"] = A.dim();
    j["basis"] = json::array();
    for (const auto& b : A.basis())
        j["basis"].push_back({{"label", b.label}, {"degree", b.degree}, {"src", b.src}, {"tgt", b.tgt}});
    j["idempotents"] = A.idempotents();
    json prods = json::object();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = 0; k < A.dim(); ++k) {
            const auto& terms = A.product(static_cast<int>(i), static_cast<int>(k));
            if (terms.empty()) continue;
            json arr = json::array();
            for (const auto& [t, s] : terms) arr.push_back({s.str(), t});
            prods[std::to_string(i) + "*" + std::to_string(k)] = std::move(arr);
        }
    j["products"] = std::move(prods);
    return j.dump(2) + "\n";
}

std::string module_json(const GradedModule& X) {
    json j;
    std::vector<int> degrees;
    std::vector<int> dims;
    for (const auto& [d, n] : X.dims) {
        degrees.push_back(d);
        dims.push_back(n);
    }
    j["degrees"] = degrees;
    j["dims"] = dims;
    if (X.mod > 0) j["mod"] = X.mod;
    json actions = json::object();
    for (std::size_t b = 0; b < X.act.size(); ++b) {
        json per = json::array();
        bool any = false;
        for (int d : degrees) {
            Matrix m = X.action(static_cast<int>(b), d);
            json rows = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
                rows.push_back(std::move(row));
            }
            if (!m.is_zero()) any = true;
            per.push_back(std::move(rows));
        }
        if (any) actions[X.A->basis_elem(static_cast<int>(b)).label] = std::move(per);
    }
    j["actions"] = std::move(actions);
    return j.dump(2) + "\n";
}

} // namespace grmod
