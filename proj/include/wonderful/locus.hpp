#pragma once

#include "wonderful/labels.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wonderful {

/// Which compactification is being modelled.
///   XDUpper   -- X_D^[n]: only the D-loci are blown up.
///   XDBracket -- X_D[n]: D-loci, then the transforms of the diagonals.
///   FM        -- X[n]: D is empty, the Fulton-MacPherson space.
enum class SpaceKind { XDUpper, XDBracket, FM };

std::string_view to_string(SpaceKind s);
SpaceKind parse_space_kind(std::string_view text);

struct Component {
    std::string name;
    int dim = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Ambient data: n labelled points on a smooth X of dimension ambient_dim
/// carrying pairwise disjoint smooth components D_c of dimension < ambient_dim.
struct GeometryConfig {
    int n = 0;
    int ambient_dim = 1;
    std::vector<Component> components;
    SpaceKind space = SpaceKind::XDBracket;

    int component_count() const { return static_cast<int>(components.size()); }
    int component_dim(int c) const { return components.at(static_cast<std::size_t>(c)).dim; }

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    /// Same geometry over a different number of points.
    GeometryConfig with_points(int points) const;

    friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

/// Convenience: `count` components named c1.. each of dimension `dim`.
GeometryConfig make_geometry(int n, int ambient_dim, int count, int dim, SpaceKind space);

/// Label of a blowup center inside X^n: a D-locus D_{c,S} or a polydiagonal Δ_P.
class Center {
public:
    enum class Kind { DLocus, Diagonal };

    Center() = default;

    static Center d_locus(int component, const IndexSubset& subset);
    /// Simple diagonal Δ_I.
    static Center diagonal(const IndexSubset& block);
    static Center diagonal(const Partition& partition);

    Kind kind() const { return kind_; }
    bool is_d_locus() const { return kind_ == Kind::DLocus; }
    bool is_diagonal() const { return kind_ == Kind::Diagonal; }
    bool is_simple_diagonal() const;
    int population() const;
    int component() const { return component_; }
    /// S for a D-locus, the unique non-singleton block for a simple diagonal.
    const IndexSubset& subset() const { return subset_; }
    const Partition& partition() const { return partition_; }

    /// "D:c1:{1,2}", "Delta:{1,2}", or "Delta:{{1,2},{3,4}}" for polydiagonals.
    std::string label() const;

    /// Throws if the component index or population disagrees with g.
    void validate(const GeometryConfig& g) const;

    friend bool operator==(const Center&, const Center&) = default;
    /// D-loci before diagonals, then component, then canonical subset order.
    friend std::strong_ordering operator<=>(const Center& a, const Center& b);

private:
    Kind kind_ = Kind::DLocus;
    int component_ = -1;
    IndexSubset subset_;
    Partition partition_;
};

/// Parses a center label for population n. Component indices in labels are 1-based.
Center parse_center(std::string_view text, int n);

/// Canonical form of a finite intersection of centers.
///
/// A partition of N, plus an optional component pin on each block (-1 when
/// unpinned). Blocks pinned to the same zero-dimensional component are merged,
/// since two points lying on a single point coincide. A block pinned to two
/// different components makes the whole locus empty.
class Locus {
public:
    static Locus whole(int n);
    static Locus empty(int n);
    /// Normalizes: merges zero-dimensional pins, detects conflicts.
    static Locus make(const Partition& partition, std::vector<int> block_pins, const GeometryConfig& g);

    int population() const { return partition_.population(); }
    bool is_empty() const { return empty_; }
    const Partition& partition() const { return partition_; }
    /// One entry per block of partition(); -1 for unpinned blocks.
    const std::vector<int>& pins() const { return pins_; }
    /// Pin on the block containing point i, -1 if none.
    int pin_of(int i) const;

    std::string to_string() const;

    friend bool operator==(const Locus&, const Locus&) = default;
    friend auto operator<=>(const Locus&, const Locus&) = default;

private:
    Partition partition_;
    std::vector<int> pins_;
    bool empty_ = false;
};

Locus center_to_locus(const Center& c, const GeometryConfig& g);
Locus intersect(const Locus& a, const Locus& b, const GeometryConfig& g);
Locus intersect(const Center& a, const Center& b, const GeometryConfig& g);

/// Σ over blocks of (d_c if pinned to c else d); nullopt when empty.
std::optional<int> dimension(const Locus& l, const GeometryConfig& g);
std::optional<int> codimension(const Locus& l, const GeometryConfig& g);

/// True iff inner ⊆ outer.
bool contains(const Locus& outer, const Locus& inner);
bool contains(const Center& outer, const Center& inner, const GeometryConfig& g);

enum class PairPosition { Disjoint, Transversal, CleanContainment, CleanOverlap, NotClean };

std::string_view to_string(PairPosition p);

/// Classification by locus arithmetic: emptiness, then containment, then
/// additivity of codimension. Never returns NotClean for the supported centers:
/// they are all simultaneously locally linear.
PairPosition pair_position(const Center& a, const Center& b, const GeometryConfig& g);

/// The same classification read off the index sets directly. Only defined for
/// D-loci and simple diagonals; nullopt for polydiagonals.
std::optional<PairPosition> closed_form_position(const Center& a, const Center& b, const GeometryConfig& g);

/// Pattern for disjoint transforms after blowing up `separator`: v1 and v2
/// intersect cleanly and v1 ∩ v2 ⊆ separator ⊊ v1.
bool separates(const Center& v1, const Center& v2, const Center& separator, const GeometryConfig& g);

} // namespace wonderful
