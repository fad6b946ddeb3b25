#include "wonderful/building_sets.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace wonderful {

namespace {

bool larger_then_lex(const IndexSubset& a, const IndexSubset& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

std::vector<Locus> loci_of(std::span<const Center> centers, const GeometryConfig& g)
{
    std::vector<Locus> out;
    out.reserve(centers.size());
    for (const auto& c : centers)
        out.push_back(center_to_locus(c, g));
    return out;
}

Locus intersect_all(std::span<const Locus> loci, const GeometryConfig& g)
{
    Locus acc = Locus::whole(g.n);
    for (const auto& l : loci)
        acc = intersect(acc, l, g);
    return acc;
}

/// Indices of members minimal among those containing w.
std::vector<std::size_t> factor_indices(std::span<const Locus> members, const Locus& w)
{
    std::vector<std::size_t> over;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (contains(members[i], w))
            over.push_back(i);
    std::vector<std::size_t> out;
    for (std::size_t i : over) {
        bool minimal = true;
        for (std::size_t j : over)
            if (members[j] != members[i] && contains(members[i], members[j])) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(i);
    }
    return out;
}

void require_members(const BuildingSet& bs, std::span<const Center> sub)
{
    for (const auto& c : sub)
        if (std::find(bs.members.begin(), bs.members.end(), c) == bs.members.end())
            throw std::invalid_argument("center " + c.label() + " is not a member of the building set");
}

} // namespace

StagedBuildingSets building_set_for(const GeometryConfig& g)
{
    g.validate();
    StagedBuildingSets out;
    out.first_stage.geometry = g;
    out.first_stage.stage = Stage::Ambient;
    out.second_stage.geometry = g;
    out.second_stage.stage = Stage::SecondStage;
    if (g.n == 0)
        return out;
    if (g.space != SpaceKind::FM) {
        auto subsets = subsets_of_size_at_least(g.n, 1);
        for (int c = 0; c < g.component_count(); ++c)
            for (const auto& s : subsets)
                out.first_stage.members.push_back(Center::d_locus(c, s));
    }
    if (g.space != SpaceKind::XDUpper)
        for (const auto& s : subsets_of_size_at_least(g.n, 2))
            out.second_stage.members.push_back(Center::diagonal(s));
    return out;
}

std::vector<Center> UniversalFamily::centers() const
{
    std::vector<Center> out = d_centers;
    out.insert(out.end(), diagonal_centers.begin(), diagonal_centers.end());
    return out;
}

UniversalFamily universal_family_centers(const GeometryConfig& g, UniversalFamilyOptions opts)
{
    g.validate();
    if (g.n + 1 > kMaxPoints)
        throw std::invalid_argument("universal family needs n + 1 <= 64");
    UniversalFamily fam;
    fam.geometry = g.with_points(g.n + 1);
    const int n = g.n;

    std::vector<IndexSubset> all;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
        all.emplace_back(n, bits);
    std::sort(all.begin(), all.end(), larger_then_lex);

    if (g.space != SpaceKind::FM) {
        for (const auto& t : all) {
            if (t.empty() && !opts.empty_t_as_center)
                continue;
            for (int c = 0; c < g.component_count(); ++c)
                fam.d_centers.push_back(Center::d_locus(c, plus_label(t)));
        }
        if (!opts.empty_t_as_center)
            for (int c = 0; c < g.component_count(); ++c)
                fam.boundary_labels.push_back(Center::d_locus(c, plus_label(IndexSubset(n, 0))));
    }
    if (g.space != SpaceKind::XDUpper) {
        int min_size = opts.singleton_diagonals ? 1 : 2;
        for (const auto& s : all)
            if (s.size() >= min_size)
                fam.diagonal_centers.push_back(Center::diagonal(plus_label(s)));
    }
    for (int i = 1; i <= n; ++i)
        fam.sections.push_back(Center::diagonal(plus_label(IndexSubset::singleton(n, i))));
    return fam;
}

std::vector<Locus> intersection_closure(std::span<const Locus> loci, const GeometryConfig& g)
{
    std::set<Locus> seen;
    std::vector<Locus> frontier;
    for (const auto& l : loci)
        if (!l.is_empty() && seen.insert(l).second)
            frontier.push_back(l);
    while (!frontier.empty()) {
        std::vector<Locus> next;
        for (const auto& w : frontier)
            for (const auto& l : loci) {
                Locus m = intersect(w, l, g);
                if (!m.is_empty() && seen.insert(m).second)
                    next.push_back(m);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool meets_transversely(std::span<const Locus> loci, const GeometryConfig& g)
{
    const std::size_t k = loci.size();
    if (k > 16)
        throw std::invalid_argument("meets_transversely: collection too large");
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;
    std::vector<Locus> partial(std::size_t{1} << k, Locus::whole(g.n));
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(low));
        partial[mask] = intersect(partial[mask & ~low], loci[bit], g);
    }
    for (std::uint32_t first = 1; first <= all; ++first) {
        std::uint32_t rest = all & ~first;
        // Each unordered pair once: second ranges over subsets of the complement above first.
        for (std::uint32_t second = rest; second != 0; second = (second - 1) & rest) {
            if (second < first)
                continue;
            const Locus& a = partial[first];
            const Locus& b = partial[second];
            if (a.is_empty() || b.is_empty())
                continue;
            Locus both = partial[first | second];
            if (both.is_empty())
                continue;
            if (*codimension(both, g) != *codimension(a, g) + *codimension(b, g))
                return false;
        }
    }
    return true;
}

std::vector<Center> g_factors(const BuildingSet& bs, std::span<const Center> sub)
{
    require_members(bs, sub);
    if (sub.empty())
        throw std::invalid_argument("g_factors: empty subcollection");
    const GeometryConfig& g = bs.geometry;
    auto members = loci_of(bs.members, g);
    auto sub_loci = loci_of(sub, g);
    Locus w = intersect_all(sub_loci, g);
    if (w.is_empty())
        throw std::invalid_argument("g_factors: the subcollection has empty intersection");
    std::vector<Center> out;
    for (std::size_t i : factor_indices(members, w))
        out.push_back(bs.members[i]);
    return out;
}

bool is_nested_flag_oracle(const BuildingSet& bs, std::span<const Center> sub)
{
    require_members(bs, sub);
    if (sub.empty())
        return true;
    const GeometryConfig& g = bs.geometry;
    if (sub.size() > 30)
        throw std::invalid_argument("flag oracle limited to 30 elements");
    auto members = loci_of(bs.members, g);
    auto sub_loci = loci_of(sub, g);
    auto candidates = intersection_closure(sub_loci, g);

    // Which elements of sub are factors of each candidate W.
    std::vector<std::uint32_t> covers(candidates.size(), 0);
    for (std::size_t w = 0; w < candidates.size(); ++w)
        for (std::size_t i : factor_indices(members, candidates[w]))
            for (std::size_t s = 0; s < sub.size(); ++s)
                if (members[i] == sub_loci[s])
                    covers[w] |= std::uint32_t{1} << s;
    const std::uint32_t goal = (std::uint32_t{1} << sub.size()) - 1;

    // Chains run from small W to large W; search (node, covered) states.
    const std::size_t m = candidates.size();
    std::vector<std::vector<std::size_t>> up(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b && contains(candidates[b], candidates[a]))
                up[a].push_back(b);

    std::set<std::pair<std::size_t, std::uint32_t>> visited;
    std::vector<std::pair<std::size_t, std::uint32_t>> stack;
    for (std::size_t w = 0; w < m; ++w)
        stack.emplace_back(w, covers[w]);
    while (!stack.empty()) {
        auto [w, mask] = stack.back();
        stack.pop_back();
        if (mask == goal)
            return true;
        if (!visited.insert({w, mask}).second)
            continue;
        for (std::size_t next : up[w]) {
            std::uint32_t grown = mask | covers[next];
            if (!visited.count({next, grown}))
                stack.emplace_back(next, grown);
        }
    }
    return false;
}

bool is_building_set_prefix(const BuildingSet& bs, std::size_t k)
{
    if (k < 1 || k > bs.members.size())
        throw std::invalid_argument("is_building_set_prefix: k out of range");
    const GeometryConfig& g = bs.geometry;
    std::span<const Center> prefix(bs.members.data(), k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (pair_position(prefix[i], prefix[j], g) == PairPosition::NotClean)
                return false;

    auto loci = loci_of(prefix, g);
    for (const auto& w : intersection_closure(loci, g)) {
        std::vector<Locus> factors;
        for (std::size_t i : factor_indices(loci, w))
            factors.push_back(loci[i]);
        if (!meets_transversely(factors, g))
            return false;
        if (intersect_all(factors, g) != w)
            return false;
    }
    return true;
}

} // namespace wonderful
