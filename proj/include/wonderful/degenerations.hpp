#pragma once

#include "wonderful/nested_sets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wonderful {

enum class VertexKind { Root, DLevel, Screen };

/// One component of a stable degeneration of X.
///   Root   -- Bl_D X (or X itself when no D-level is attached).
///   DLevel -- P(N_{D_c/X} ⊕ 1), the depth-th level of the expansion along D_c.
///   Screen -- P(T_x ⊕ 1), glued at a point of its parent away from D.
struct Vertex {
    VertexKind kind = VertexKind::Root;
    int component = -1; // DLevel only
    int depth = 0;      // DLevel only, 1-based
    int parent = -1;
    std::vector<int> markings;
    /// DLevel markings lie off both sections P(N) and P(1).
    bool markings_off_sections = true;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Dual graph of a fiber of the universal family. vertices[0] is the root;
/// every parent index is smaller than its child's.
struct DegenerationTree {
    GeometryConfig geometry;
    std::vector<Vertex> vertices;

    std::vector<int> children(int v) const;
    /// Vertex carrying marking i.
    int vertex_of_marking(int i) const;
    /// Markings carried anywhere in the subtree rooted at v.
    IndexSubset subtree_markings(int v) const;

    /// Throws std::invalid_argument on a broken structural invariant.
    void check_structure() const;

    friend bool operator==(const DegenerationTree& a, const DegenerationTree& b)
    {
        return a.vertices == b.vertices;
    }
};

DegenerationTree fiber_tree(const NestedSet& ns);

struct StabilityCheck {
    bool stable = true;
    std::optional<int> violating_vertex;
    explicit operator bool() const { return stable; }
};

/// Screens need two special points, D-levels one. Special points are the
/// markings on a vertex plus the screens attached to it; a child D-level is
/// glued along the already fixed section P(N), so it does not count.
StabilityCheck is_stable(const DegenerationTree& t);

/// Reads the nested set back off a stable tree.
NestedSet tree_to_nested(const DegenerationTree& t);

/// Graphviz rendering with stable vertex names and labels.
std::string to_dot(const DegenerationTree& t);

struct SectionCertificate {
    int point = 0;     // a
    int component = 0; // c
    Center v1;         // D_{c,{n+1}}
    Center v2;         // Δ_{{a,n+1}}
    Center separator;  // D_{c,{a,n+1}}
};

struct SectionCheck {
    bool ok = true;
    std::vector<SectionCertificate> certificates;
    explicit operator bool() const { return ok; }
};

/// For each point a and component c, certifies that the section Δ_{{a}+}
/// misses D_{c,{n+1}} in the universal family.
SectionCheck sections_disjoint_check(const GeometryConfig& g);

} // namespace wonderful
