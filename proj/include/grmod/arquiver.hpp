#pragma once

#include <cstdint>
#include <string>

#include "grmod/decompose.hpp"

namespace grmod {

// Auslander-Reiten quiver of the stable graded module category within a
// shift window. Vertices are (class, shift) with the class representative
// normalized to start in degree 0; solid arrows carry dim rad/rad^2 of the
// stable Hom computed within the vertex set; dashed arrows are tau.
struct ARQuiver {
    struct Vertex {
        std::string cls;   // class name, e.g. "X1"
        int shift = 0;     // vertex = representative(shift)
        GradedModule module;
        bool boundary = false; // tau or a syzygy left the window
        std::string label() const { return cls + "(" + std::to_string(shift) + ")"; }
    };
    struct Edge {
        int src = 0, tgt = 0, mult = 1;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> solid;
    std::vector<std::pair<int, int>> tau_arrows; // (v, tau v)
};

// `plain_hom` switches the arrow computation from stable Hom to plain Hom
// (for hereditary degree-0 inputs).
ARQuiver ar_quiver(const GradedAlgebra& A, int window_lo, int window_hi, std::uint64_t seed = 0,
                   bool plain_hom = false);

// Mesh test at every interior vertex: sources of incoming arrows equal
// targets of arrows leaving tau(v), as multisets.
bool verify_mesh_property(const ARQuiver& q);

// Graphviz text (LF line endings, two-space indent, vertices sorted
// lexicographically).
std::string emit_dot(const ARQuiver& q);

std::string arquiver_json(const ARQuiver& q);

} // namespace grmod
