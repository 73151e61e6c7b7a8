#pragma once

#include <optional>
#include <string>

#include "grmod/module.hpp"
#include "grmod/quiver.hpp"

namespace grmod {

// Parsed algebra description: either a quiver presentation or a builtin
// constructor (trivial_extension_of, preprojective_of, nakayama).
struct AlgebraSpec {
    AlgebraPtr algebra;
    std::optional<Quiver> preprojective_quiver; // set for the preprojective builtin
    std::string source_name;
};

AlgebraSpec parse_algebra_spec_text(const std::string& text, std::optional<Field> field_override,
                                    std::optional<int> cap_override);
AlgebraSpec load_algebra_spec(const std::string& path, std::optional<Field> field_override,
                              std::optional<int> cap_override);

Field parse_field_flag(const std::string& text); // "rational" or "p=PRIME"

// Canonical JSON dumps for golden tests.
std::string algebra_json(const GradedAlgebra& A);
std::string module_json(const GradedModule& X);

} // namespace grmod
