#pragma once

#include "wonderful/locus.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace wonderful {

/// A boundary divisor of X_D^[n] or X_D[n]: the transform D̃_{c,S} (|S| >= 1)
/// or Δ̃_I (|I| >= 2).
class BoundaryDivisor {
public:
    enum class Kind { DTilde, DeltaTilde };

    BoundaryDivisor() = default;
    static BoundaryDivisor d_tilde(int component, const IndexSubset& s);
    static BoundaryDivisor delta_tilde(const IndexSubset& i);
    /// Accepts D-loci and simple diagonals.
    static BoundaryDivisor from_center(const Center& c);

    Kind kind() const { return kind_; }
    bool is_d() const { return kind_ == Kind::DTilde; }
    bool is_delta() const { return kind_ == Kind::DeltaTilde; }
    int component() const { return component_; }
    const IndexSubset& subset() const { return subset_; }
    int population() const { return subset_.population(); }

    Center to_center() const;
    std::string label() const { return to_center().label(); }

    /// DeltaTilde needs X_D[n] or FM; DTilde needs a non-FM space and a valid component.
    void validate(const GeometryConfig& g) const;

    friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;
    friend std::strong_ordering operator<=>(const BoundaryDivisor& a, const BoundaryDivisor& b);

private:
    Kind kind_ = Kind::DTilde;
    int component_ = -1;
    IndexSubset subset_;
};

BoundaryDivisor parse_divisor(std::string_view text, int n);

/// Pairwise nestedness: same-component D-sets form chains, different
/// components are disjoint, diagonals form a laminar family, and each
/// diagonal set is disjoint from or inside each D-set.
bool is_nested(const GeometryConfig& g, std::span<const BoundaryDivisor> divisors);

/// Whether a single pair may appear together in a nested set.
bool compatible(const BoundaryDivisor& a, const BoundaryDivisor& b);

/// A collection satisfying is_nested; divisors held in canonical order.
class NestedSet {
public:
    NestedSet(std::shared_ptr<const GeometryConfig> geometry, std::vector<BoundaryDivisor> divisors);
    NestedSet(const GeometryConfig& geometry, std::vector<BoundaryDivisor> divisors);

    const GeometryConfig& geometry() const { return *geometry_; }
    const std::vector<BoundaryDivisor>& divisors() const { return divisors_; }
    std::size_t size() const { return divisors_.size(); }
    bool empty() const { return divisors_.empty(); }

    /// JSON-style array of labels: ["D:c1:{1,2}","Delta:{1,2}"].
    std::string to_string() const;

    friend bool operator==(const NestedSet& a, const NestedSet& b) { return a.divisors_ == b.divisors_; }

private:
    std::shared_ptr<const GeometryConfig> geometry_;
    std::vector<BoundaryDivisor> divisors_;
};

/// All boundary divisors of g in canonical order.
std::vector<BoundaryDivisor> all_divisors(const GeometryConfig& g);

/// Closed-form divisor count.
std::uint64_t count_divisors(const GeometryConfig& g);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    std::optional<int> max_size;
    int workers = 1;
    /// Exhaustive enumeration is refused above this many divisors unless max_size <= 2.
    int divisor_limit = 40;
};

/// All nested sets (the empty set included), ordered by size and then by the
/// canonical divisor order. Output does not depend on `workers`.
std::vector<NestedSet> enumerate_nested_sets(const GeometryConfig& g, const EnumerationOptions& opts = {});

/// Nested sets maximal under inclusion.
std::vector<NestedSet> maximal_nested_sets(const GeometryConfig& g, const EnumerationOptions& opts = {});

/// Entry k counts nested sets of size k.
std::vector<std::uint64_t> f_vector(const GeometryConfig& g, const EnumerationOptions& opts = {});

/// Witness that two divisor transforms are disjoint: v1 ∩ v2 ⊆ separator ⊊ v1
/// with the separator itself a blowup center of the construction.
struct DisjointnessCertificate {
    Center v1;
    Center v2;
    Center separator;
    std::size_t separator_position = 0; // index in the construction order
};

/// For a D̃_{c,S}, Δ̃_I pair with S ∩ I ≠ ∅ and I ⊄ S, searches the interleaved
/// construction order of X_D[n] for a separating center. nullopt if none.
std::optional<DisjointnessCertificate> certify_disjoint(const GeometryConfig& g, const BoundaryDivisor& a,
                                                        const BoundaryDivisor& b);

} // namespace wonderful
