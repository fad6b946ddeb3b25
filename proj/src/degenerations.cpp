#include "wonderful/degenerations.hpp"

#include "wonderful/building_sets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wonderful {

std::vector<int> DegenerationTree::children(int v) const
{
    std::vector<int> out;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k].parent == v)
            out.push_back(static_cast<int>(k));
    return out;
}

int DegenerationTree::vertex_of_marking(int i) const
{
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const auto& m = vertices[k].markings;
        if (std::find(m.begin(), m.end(), i) != m.end())
            return static_cast<int>(k);
    }
    throw std::invalid_argument("marking " + std::to_string(i) + " is not carried by any vertex");
}

IndexSubset DegenerationTree::subtree_markings(int v) const
{
    IndexSubset out(geometry.n, 0);
    // Parents precede children, so one forward sweep marks the subtree.
    std::vector<bool> inside(vertices.size(), false);
    inside[static_cast<std::size_t>(v)] = true;
    for (std::size_t k = static_cast<std::size_t>(v); k < vertices.size(); ++k) {
        if (k != static_cast<std::size_t>(v)) {
            int p = vertices[k].parent;
            inside[k] = p >= 0 && inside[static_cast<std::size_t>(p)];
        }
        if (inside[k])
            out = out | IndexSubset::from_members(geometry.n, vertices[k].markings);
    }
    return out;
}

void DegenerationTree::check_structure() const
{
    auto fail = [](const std::string& why) { throw std::invalid_argument("malformed degeneration tree: " + why); };
    if (vertices.empty() || vertices[0].kind != VertexKind::Root || vertices[0].parent != -1)
        fail("vertex 0 must be the root");
    std::vector<int> seen(static_cast<std::size_t>(geometry.n) + 1, 0);
    std::vector<int> chain_starts(static_cast<std::size_t>(geometry.component_count()), 0);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const Vertex& v = vertices[k];
        for (int i : v.markings) {
            if (i < 1 || i > geometry.n)
                fail("marking " + std::to_string(i) + " out of range");
            ++seen[static_cast<std::size_t>(i)];
        }
        if (k == 0)
            continue;
        if (v.kind == VertexKind::Root)
            fail("more than one root");
        if (v.parent < 0 || static_cast<std::size_t>(v.parent) >= k)
            fail("vertex " + std::to_string(k) + " must follow its parent");
        const Vertex& p = vertices[static_cast<std::size_t>(v.parent)];
        if (v.kind == VertexKind::DLevel) {
            if (v.component < 0 || v.component >= geometry.component_count())
                fail("D-level with invalid component");
            if (v.depth == 1) {
                if (p.kind != VertexKind::Root)
                    fail("depth-1 D-level must hang off the root");
                if (++chain_starts[static_cast<std::size_t>(v.component)] > 1)
                    fail("two D-chains for one component");
            } else if (p.kind != VertexKind::DLevel || p.component != v.component || p.depth != v.depth - 1) {
                fail("D-level depth " + std::to_string(v.depth) + " must follow depth " + std::to_string(v.depth - 1));
            }
            if (!v.markings_off_sections)
                fail("D-level markings must avoid both sections");
        }
    }
    for (int i = 1; i <= geometry.n; ++i)
        if (seen[static_cast<std::size_t>(i)] != 1)
            fail("marking " + std::to_string(i) + " appears " + std::to_string(seen[static_cast<std::size_t>(i)]) +
                 " times");
}

DegenerationTree fiber_tree(const NestedSet& ns)
{
    const GeometryConfig& g = ns.geometry();
    DegenerationTree t;
    t.geometry = g;
    t.vertices.push_back(Vertex{});

    // Vertex index -> index set it accounts for (D-levels and screens).
    std::vector<std::optional<IndexSubset>> owned{std::nullopt};

    for (int c = 0; c < g.component_count(); ++c) {
        std::vector<IndexSubset> chain;
        for (const auto& d : ns.divisors())
            if (d.is_d() && d.component() == c)
                chain.push_back(d.subset());
        std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
        int parent = 0;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            Vertex v;
            v.kind = VertexKind::DLevel;
            v.component = c;
            v.depth = static_cast<int>(k) + 1;
            v.parent = parent;
            parent = static_cast<int>(t.vertices.size());
            t.vertices.push_back(v);
            owned.push_back(chain[k]);
        }
    }
    const std::size_t first_screen = t.vertices.size();

    std::vector<IndexSubset> screens;
    for (const auto& d : ns.divisors())
        if (d.is_delta())
            screens.push_back(d.subset());
    std::stable_sort(screens.begin(), screens.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    // Smallest owned set containing s among vertices [from, to).
    auto smallest_owner = [&](const IndexSubset& s, std::size_t from, std::size_t to) {
        int best = -1;
        for (std::size_t k = from; k < to; ++k)
            if (owned[k] && s.is_subset_of(*owned[k]) &&
                (best < 0 || owned[k]->size() < owned[static_cast<std::size_t>(best)]->size()))
                best = static_cast<int>(k);
        return best;
    };

    for (const auto& s : screens) {
        int parent = smallest_owner(s, first_screen, t.vertices.size());
        if (parent < 0)
            parent = std::max(0, smallest_owner(s, 1, first_screen));
        Vertex v;
        v.kind = VertexKind::Screen;
        v.parent = parent;
        t.vertices.push_back(v);
        owned.push_back(s);
    }

    for (int i = 1; i <= g.n; ++i) {
        IndexSubset point = IndexSubset::singleton(g.n, i);
        int host = smallest_owner(point, first_screen, t.vertices.size());
        if (host < 0)
            host = std::max(0, smallest_owner(point, 1, first_screen));
        t.vertices[static_cast<std::size_t>(host)].markings.push_back(i);
    }
    return t;
}

StabilityCheck is_stable(const DegenerationTree& t)
{
    std::vector<int> special(t.vertices.size(), 0);
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        special[k] += static_cast<int>(t.vertices[k].markings.size());
        const Vertex& v = t.vertices[k];
        if (v.kind == VertexKind::Screen && v.parent >= 0)
            ++special[static_cast<std::size_t>(v.parent)];
    }
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        int needed = 0;
        switch (t.vertices[k].kind) {
        case VertexKind::Root: needed = 0; break;
        case VertexKind::DLevel: needed = 1; break;
        case VertexKind::Screen: needed = 2; break;
        }
        if (special[k] < needed)
            return {false, static_cast<int>(k)};
    }
    return {};
}

NestedSet tree_to_nested(const DegenerationTree& t)
{
    t.check_structure();
    if (auto s = is_stable(t); !s)
        throw std::invalid_argument("tree_to_nested: vertex " + std::to_string(*s.violating_vertex) + " is unstable");
    std::vector<BoundaryDivisor> out;
    for (std::size_t k = 1; k < t.vertices.size(); ++k) {
        const Vertex& v = t.vertices[k];
        IndexSubset s = t.subtree_markings(static_cast<int>(k));
        if (v.kind == VertexKind::DLevel)
            out.push_back(BoundaryDivisor::d_tilde(v.component, s));
        else
            out.push_back(BoundaryDivisor::delta_tilde(s));
    }
    return NestedSet(t.geometry, std::move(out));
}

std::string to_dot(const DegenerationTree& t)
{
    std::ostringstream os;
    os << "digraph fiber {\n";
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        const Vertex& v = t.vertices[k];
        std::string name;
        switch (v.kind) {
        case VertexKind::Root: name = "Root"; break;
        case VertexKind::DLevel: name = "D(c" + std::to_string(v.component + 1) + "," + std::to_string(v.depth) + ")"; break;
        case VertexKind::Screen: name = "Screen"; break;
        }
        std::vector<int> marks = v.markings;
        std::sort(marks.begin(), marks.end());
        os << "  v" << k << " [label=\"" << name << " {";
        for (std::size_t m = 0; m < marks.size(); ++m)
            os << (m ? "," : "") << marks[m];
        os << "}\"];\n";
    }
    for (std::size_t k = 1; k < t.vertices.size(); ++k)
        os << "  v" << t.vertices[k].parent << " -> v" << k << ";\n";
    os << "}\n";
    return os.str();
}

SectionCheck sections_disjoint_check(const GeometryConfig& g)
{
    g.validate();
    SectionCheck out;
    if (g.space == SpaceKind::FM || g.component_count() == 0)
        return out;
    UniversalFamily fam = universal_family_centers(g);
    const GeometryConfig& gp = fam.geometry;
    const int extra = g.n + 1;
    for (int a = 1; a <= g.n; ++a)
        for (int c = 0; c < g.component_count(); ++c) {
            Center v1 = Center::d_locus(c, IndexSubset::singleton(gp.n, extra));
            Center v2 = Center::diagonal(IndexSubset::of(gp.n, {a, extra}));
            Center z = Center::d_locus(c, IndexSubset::of(gp.n, {a, extra}));
            bool is_center = std::find(fam.d_centers.begin(), fam.d_centers.end(), z) != fam.d_centers.end();
            if (!is_center || !separates(v1, v2, z, gp)) {
                out.ok = false;
                continue;
            }
            out.certificates.push_back({a, c, v1, v2, z});
        }
    return out;
}

} // namespace wonderful
