#pragma once

#include "wonderful/building_sets.hpp"
#include "wonderful/locus.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wonderful {

struct BlowupSequence {
    GeometryConfig geometry;
    std::vector<Center> centers;
};

/// Inclusion: every center of the space, larger index sets first.
/// Reshuffled: rounds k = 1..n of D_{c,S} with max(S) = k, decreasing |S|.
/// Interleaved: each round lists its D-centers, then Δ_I with max(I) = k.
/// TwoBlock: all reshuffled D-rounds, then all diagonal rounds.
///
/// Ties inside a round are broken lexicographically on S, then by component.
enum class OrderScheme { Inclusion, Reshuffled, Interleaved, TwoBlock };

std::string_view to_string(OrderScheme s);
OrderScheme parse_order_scheme(std::string_view text);

BlowupSequence generate_order(const GeometryConfig& g, OrderScheme scheme);

struct InclusionViolation {
    std::size_t earlier = 0; // position of the larger center
    std::size_t later = 0;   // position of the center strictly inside it
};

struct InclusionCheck {
    bool ok = true;
    std::optional<InclusionViolation> violation;
    explicit operator bool() const { return ok; }
};

/// Strictly contained centers must come first.
InclusionCheck validate_inclusion_order(const BlowupSequence& seq);

struct BuildingOrderCheck {
    bool ok = true;
    std::optional<std::size_t> failing_prefix; // shortest prefix length that is not a building set
    explicit operator bool() const { return ok; }
};

/// Every prefix is a building set. Only single-stage sequences (all D-loci, or
/// all simple diagonals) are accepted; mixed ones throw std::invalid_argument,
/// use swap_rewrite for those.
BuildingOrderCheck validate_building_set_order(const BlowupSequence& seq);

/// How a pair of adjacent centers is classified before swapping them.
///   Ambient    -- the X^n classification of the two centers.
///   StageAware -- the ambient classification, refined by what has already
///                 been blown up: a pair separated by an earlier center is
///                 disjoint, and D_{c,T}, Δ_I become transversal once
///                 D_{c,T∩I} has been blown up.
enum class SwapRule { Ambient, StageAware };

PairPosition stage_position(const Center& a, const Center& b, std::span<const Center> blown_up,
                            const GeometryConfig& g);

struct SwapStep {
    std::size_t position = 0; // swapped entries position and position + 1
    Center left;
    Center right;
    PairPosition certified = PairPosition::Transversal;
};

struct RewriteResult {
    bool ok = true;
    std::vector<SwapStep> trace;
    std::optional<std::pair<Center, Center>> blocking;
    PairPosition blocking_position = PairPosition::Transversal;
    std::vector<Center> final_order;
    explicit operator bool() const { return ok; }
};

/// Greedy adjacent-transposition rewrite of seq into target. Each swap must be
/// certified disjoint or transversal. Throws if the center multisets differ.
RewriteResult swap_rewrite(const BlowupSequence& seq, const BlowupSequence& target,
                           SwapRule rule = SwapRule::StageAware);

} // namespace wonderful
