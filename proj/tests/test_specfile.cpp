#include "doctest.h"

#include "grmod/cover.hpp"
#include "grmod/specfile.hpp"
#include "grmod/structure.hpp"

#include <fstream>
#include <sstream>

using namespace grmod;

TEST_CASE("parse a quiver presentation") {
    std::string text = R"({
      "field": {"type": "rational"},
      "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1", "degree": 1}]},
      "relations": [{"terms": [{"coeff": "1", "path": ["x", "x", "x"]}]}],
      "max_path_length": 4,
      "name": "Kx3"
    })";
    AlgebraSpec spec = parse_algebra_spec_text(text, std::nullopt, std::nullopt);
    CHECK(spec.algebra->dim() == 3);
    CHECK(is_self_injective(*spec.algebra).self_injective);
}

TEST_CASE("parse builtins") {
    std::string nak = R"({"builtin": {"nakayama": {"loop_length": 1, "nilpotency": 3}}})";
    CHECK(parse_algebra_spec_text(nak, std::nullopt, std::nullopt).algebra->dim() == 3);

    std::string triv = R"({
      "builtin": {"trivial_extension_of": {
        "quiver": {"vertices": ["1", "2"],
                   "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 0}]},
        "relations": [],
        "max_path_length": 2
      }}
    })";
    AlgebraSpec t = parse_algebra_spec_text(triv, std::nullopt, std::nullopt);
    CHECK(t.algebra->dim() == 6);
    CHECK(gorenstein_parameter(*t.algebra) == 1);

    std::string pp = R"({
      "builtin": {"preprojective_of": {"vertices": ["1", "2"],
        "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 0}]}}
    })";
    AlgebraSpec p = parse_algebra_spec_text(pp, std::nullopt, std::nullopt);
    CHECK(p.algebra->dim() == 4);
    CHECK(p.preprojective_quiver.has_value());
}

TEST_CASE("prime fields and the mod coefficient syntax") {
    std::string text = R"({
      "field": {"type": "prime", "p": 5},
      "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1", "degree": 1}]},
      "relations": [{"terms": [{"coeff": "4 mod 5", "path": ["x", "x"]}]}],
      "max_path_length": 3
    })";
    AlgebraSpec spec = parse_algebra_spec_text(text, std::nullopt, std::nullopt);
    CHECK(spec.algebra->dim() == 2);
    CHECK(spec.algebra->field().p == 5);
    // wrong modulus is rejected
    std::string bad = text;
    bad.replace(bad.find("4 mod 5"), 7, "4 mod 7");
    CHECK_THROWS_AS(parse_algebra_spec_text(bad, std::nullopt, std::nullopt), ParseError);
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(parse_algebra_spec_text("{not json", std::nullopt, std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_algebra_spec_text("{}", std::nullopt, std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_algebra_spec_text(R"({"quiver": {"vertices": [], "arrows": []},
        "builtin": {"nakayama": {"nilpotency": 2}}})",
                                            std::nullopt, std::nullopt),
                    ParseError);
}

TEST_CASE("field flag parsing") {
    CHECK(parse_field_flag("rational") == Field::rationals());
    CHECK(parse_field_flag("p=7") == Field::prime(7));
    CHECK_THROWS_AS(parse_field_flag("f2"), ParseError);
}

TEST_CASE("algebra dump matches the golden file") {
    auto A = nakayama_algebra(1, 3, Field::rationals(), "Kx3");
    std::ifstream gf(std::string(GOLDEN_DIR) + "/kx3_algebra.json", std::ios::binary);
    REQUIRE(gf.good());
    std::stringstream ss;
    ss << gf.rdbuf();
    CHECK(algebra_json(*A) == ss.str());
}

TEST_CASE("module dump matches the golden file") {
    auto A = nakayama_algebra(1, 3, Field::rationals(), "Kx3");
    GradedModule X1 = truncate_below(regular_module(*A), 1).m;
    std::ifstream gf(std::string(GOLDEN_DIR) + "/kx3_x1_module.json", std::ios::binary);
    REQUIRE(gf.good());
    std::stringstream ss;
    ss << gf.rdbuf();
    CHECK(module_json(X1) == ss.str());
}

TEST_CASE("canonical dumps are deterministic") {
    auto A = nakayama_algebra(1, 3, Field::rationals(), "Kx3");
    CHECK(algebra_json(*A) == algebra_json(*A));
    CHECK(algebra_json(*A).find("\"dim\": 3") != std::string::npos);
    GradedModule R = regular_module(*A);
    std::string mj = module_json(R);
    CHECK(mj == module_json(R));
    CHECK(mj.find("\"degrees\"") != std::string::npos);
}
