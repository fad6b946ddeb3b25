#include "wonderful/blowup_orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace wonderful {

namespace {

bool larger_then_lex(const IndexSubset& a, const IndexSubset& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

/// Subsets S with max(S) = k and |S| >= min_size, larger first, then lexicographic.
std::vector<IndexSubset> round_subsets(int n, int k, int min_size)
{
    std::vector<IndexSubset> out;
    std::uint64_t top = std::uint64_t{1} << (k - 1);
    for (std::uint64_t lower = 0; lower < top; ++lower) {
        IndexSubset s(n, lower | top);
        if (s.size() >= min_size)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end(), larger_then_lex);
    return out;
}

void append_d_round(std::vector<Center>& out, const GeometryConfig& g, int k)
{
    for (const auto& s : round_subsets(g.n, k, 1))
        for (int c = 0; c < g.component_count(); ++c)
            out.push_back(Center::d_locus(c, s));
}

void append_delta_round(std::vector<Center>& out, const GeometryConfig& g, int k)
{
    for (const auto& s : round_subsets(g.n, k, 2))
        out.push_back(Center::diagonal(s));
}

void require_distinct(const BlowupSequence& seq)
{
    std::vector<Center> sorted = seq.centers;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("blowup sequence repeats a center");
    for (const auto& c : seq.centers)
        c.validate(seq.geometry);
}

bool in_prefix(std::span<const Center> prefix, const Center& c)
{
    return std::find(prefix.begin(), prefix.end(), c) != prefix.end();
}

} // namespace

std::string_view to_string(OrderScheme s)
{
    switch (s) {
    case OrderScheme::Inclusion: return "inclusion";
    case OrderScheme::Reshuffled: return "reshuffled";
    case OrderScheme::Interleaved: return "interleaved";
    case OrderScheme::TwoBlock: return "two-block";
    }
    return "?";
}

OrderScheme parse_order_scheme(std::string_view text)
{
    if (text == "inclusion")
        return OrderScheme::Inclusion;
    if (text == "reshuffled")
        return OrderScheme::Reshuffled;
    if (text == "interleaved")
        return OrderScheme::Interleaved;
    if (text == "two-block")
        return OrderScheme::TwoBlock;
    throw std::invalid_argument("unknown order scheme \"" + std::string(text) +
                                "\" (expected inclusion, reshuffled, interleaved or two-block)");
}

BlowupSequence generate_order(const GeometryConfig& g, OrderScheme scheme)
{
    g.validate();
    BlowupSequence seq{g, {}};
    switch (scheme) {
    case OrderScheme::Inclusion: {
        auto staged = building_set_for(g);
        seq.centers = staged.first_stage.members;
        seq.centers.insert(seq.centers.end(), staged.second_stage.members.begin(),
                           staged.second_stage.members.end());
        // A point component puts D_{c,I} inside Δ_I, so at equal size D-loci go first.
        std::stable_sort(seq.centers.begin(), seq.centers.end(), [](const Center& a, const Center& b) {
            if (a.subset().size() != b.subset().size())
                return a.subset().size() > b.subset().size();
            if (a.kind() != b.kind())
                return a.is_d_locus();
            if (a.subset() != b.subset())
                return a.subset() < b.subset();
            return a.component() < b.component();
        });
        break;
    }
    case OrderScheme::Reshuffled:
        if (g.space == SpaceKind::FM)
            throw std::invalid_argument("reshuffled order needs X_D^[n] or X_D[n]");
        for (int k = 1; k <= g.n; ++k)
            append_d_round(seq.centers, g, k);
        break;
    case OrderScheme::Interleaved:
        if (g.space != SpaceKind::XDBracket)
            throw std::invalid_argument("interleaved order needs X_D[n]");
        for (int k = 1; k <= g.n; ++k) {
            append_d_round(seq.centers, g, k);
            append_delta_round(seq.centers, g, k);
        }
        break;
    case OrderScheme::TwoBlock:
        if (g.space != SpaceKind::XDBracket)
            throw std::invalid_argument("two-block order needs X_D[n]");
        for (int k = 1; k <= g.n; ++k)
            append_d_round(seq.centers, g, k);
        for (int k = 2; k <= g.n; ++k)
            append_delta_round(seq.centers, g, k);
        break;
    }
    return seq;
}

InclusionCheck validate_inclusion_order(const BlowupSequence& seq)
{
    require_distinct(seq);
    const GeometryConfig& g = seq.geometry;
    std::vector<Locus> loci;
    for (const auto& c : seq.centers)
        loci.push_back(center_to_locus(c, g));
    for (std::size_t i = 0; i < loci.size(); ++i)
        for (std::size_t j = i + 1; j < loci.size(); ++j)
            if (loci[i] != loci[j] && contains(loci[i], loci[j]))
                return {false, InclusionViolation{i, j}};
    return {};
}

BuildingOrderCheck validate_building_set_order(const BlowupSequence& seq)
{
    require_distinct(seq);
    bool all_d = std::all_of(seq.centers.begin(), seq.centers.end(), [](const Center& c) { return c.is_d_locus(); });
    bool all_delta = std::all_of(seq.centers.begin(), seq.centers.end(),
                                 [](const Center& c) { return c.is_simple_diagonal(); });
    if (seq.centers.empty())
        return {};
    if (!all_d && !all_delta)
        throw std::invalid_argument("building-set order check needs a single-stage sequence; use swap_rewrite for mixed "
                                    "orders");
    BuildingSet bs{seq.geometry, seq.centers, all_d ? Stage::Ambient : Stage::SecondStage};
    for (std::size_t k = 1; k <= seq.centers.size(); ++k)
        if (!is_building_set_prefix(bs, k))
            return {false, k};
    return {};
}

PairPosition stage_position(const Center& a, const Center& b, std::span<const Center> blown_up,
                            const GeometryConfig& g)
{
    PairPosition ambient = pair_position(a, b, g);
    if (ambient == PairPosition::Disjoint || ambient == PairPosition::Transversal)
        return ambient;
    if (ambient == PairPosition::CleanOverlap)
        for (const auto& z : blown_up)
            if (separates(a, b, z, g) || separates(b, a, z, g))
                return PairPosition::Disjoint;
    if (a.is_d_locus() != b.is_d_locus()) {
        const Center& d = a.is_d_locus() ? a : b;
        const Center& delta = a.is_d_locus() ? b : a;
        if (delta.is_simple_diagonal()) {
            IndexSubset common = d.subset() & delta.subset();
            // The blowup along D_{c,T∩I} pulls the shared normal directions apart.
            if (common.size() >= 2 && common != d.subset() &&
                in_prefix(blown_up, Center::d_locus(d.component(), common)))
                return PairPosition::Transversal;
        }
    }
    return ambient;
}

RewriteResult swap_rewrite(const BlowupSequence& seq, const BlowupSequence& target, SwapRule rule)
{
    require_distinct(seq);
    require_distinct(target);
    if (!(seq.geometry == target.geometry))
        throw std::invalid_argument("swap_rewrite: sequences over different geometries");
    {
        auto a = seq.centers;
        auto b = target.centers;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw std::invalid_argument("swap_rewrite: sequences have different centers");
    }
    const GeometryConfig& g = seq.geometry;
    RewriteResult result;
    std::vector<Center> current = seq.centers;
    for (std::size_t p = 0; p < target.centers.size(); ++p) {
        auto it = std::find(current.begin() + static_cast<std::ptrdiff_t>(p), current.end(), target.centers[p]);
        std::size_t q = static_cast<std::size_t>(it - current.begin());
        while (q > p) {
            const Center& left = current[q - 1];
            const Center& right = current[q];
            std::span<const Center> blown(current.data(), q - 1);
            PairPosition pos = rule == SwapRule::Ambient ? pair_position(left, right, g)
                                                         : stage_position(left, right, blown, g);
            if (pos != PairPosition::Disjoint && pos != PairPosition::Transversal) {
                result.ok = false;
                result.blocking = std::make_pair(left, right);
                result.blocking_position = pos;
                result.final_order = current;
                return result;
            }
            result.trace.push_back({q - 1, left, right, pos});
            std::swap(current[q - 1], current[q]);
            --q;
        }
    }
    result.final_order = current;
    return result;
}

} // namespace wonderful
