#pragma once

#include "wonderful/labels.hpp"
#include "wonderful/locus.hpp"
#include "wonderful/nested_sets.hpp"

#include <vector>

namespace support {

/// Every D-locus and every (poly)diagonal for g.
inline std::vector<wonderful::Center> all_centers(const wonderful::GeometryConfig& g)
{
    using namespace wonderful;
    std::vector<Center> out;
    for (int c = 0; c < g.component_count(); ++c)
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.n); ++bits)
            out.push_back(Center::d_locus(c, IndexSubset(g.n, bits)));
    for (const auto& p : all_partitions(g.n))
        if (!p.is_discrete())
            out.push_back(Center::diagonal(p));
    return out;
}

/// Forest-of-subsets test: pairwise nested or disjoint.
inline bool laminar(const std::vector<wonderful::IndexSubset>& sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const auto& a = sets[i];
            const auto& b = sets[j];
            if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a))
                return false;
        }
    return true;
}

inline wonderful::GeometryConfig geometry(int n, int d, int count, int dc,
                                          wonderful::SpaceKind space = wonderful::SpaceKind::XDBracket)
{
    return wonderful::make_geometry(n, d, count, dc, space);
}

} // namespace support
