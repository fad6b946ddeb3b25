#include "wonderful/certify.hpp"

#include "wonderful/building_sets.hpp"
#include "wonderful/degenerations.hpp"
#include "wonderful/nested_sets.hpp"

#include <algorithm>

namespace wonderful {

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    }
    return "?";
}

namespace {

constexpr std::size_t kOracleItemLimit = 32;

std::string join_labels(const std::vector<Center>& cs)
{
    std::string out = "[";
    for (std::size_t k = 0; k < cs.size(); ++k)
        out += (k ? "," : "") + cs[k].label();
    return out + "]";
}

CheckResult oracle_check(const BuildingSet& bs, const GeometryConfig& g, std::string name)
{
    CheckResult r{std::move(name), CheckStatus::Pass, ""};
    if (bs.members.empty()) {
        r.status = CheckStatus::Skip;
        r.detail = "no members";
        return r;
    }
    if (bs.members.size() > kOracleItemLimit) {
        r.status = CheckStatus::Skip;
        r.detail = std::to_string(bs.members.size()) + " members exceed the limit of " +
                   std::to_string(kOracleItemLimit);
        return r;
    }
    auto pick = [&](const std::vector<std::size_t>& idx) {
        std::vector<Center> out;
        for (auto k : idx)
            out.push_back(bs.members[k]);
        return out;
    };
    auto closed = [&](const std::vector<std::size_t>& idx) {
        std::vector<BoundaryDivisor> ds;
        for (auto k : idx)
            ds.push_back(BoundaryDivisor::from_center(bs.members[k]));
        return is_nested(g, ds);
    };
    auto flag = [&](const std::vector<std::size_t>& idx) {
        auto sub = pick(idx);
        return is_nested_flag_oracle(bs, sub);
    };
    std::uint64_t visited = 0;
    if (auto bad = first_disagreement(bs.members.size(), closed, flag, &visited)) {
        r.status = CheckStatus::Fail;
        r.detail = "disagreement on " + join_labels(pick(*bad));
    } else {
        r.detail = std::to_string(visited) + " collections agree";
    }
    return r;
}

CheckResult counts_check(const GeometryConfig& g, int workers)
{
    CheckResult r{"closed-form-counts", CheckStatus::Pass, ""};
    const auto closed = count_divisors(g);
    const auto listed = all_divisors(g).size();
    if (closed != listed) {
        r.status = CheckStatus::Fail;
        r.detail = "closed form " + std::to_string(closed) + " vs listed " + std::to_string(listed);
        return r;
    }
    EnumerationOptions opts;
    opts.workers = workers;
    try {
        auto f = f_vector(g, opts);
        const std::uint64_t f1 = f.size() > 1 ? f[1] : 0;
        if (f1 != closed) {
            r.status = CheckStatus::Fail;
            r.detail = "f1 = " + std::to_string(f1) + " vs closed form " + std::to_string(closed);
        } else {
            r.detail = std::to_string(closed) + " divisors";
        }
    } catch (const BudgetExceeded&) {
        r.detail = std::to_string(closed) + " divisors; enumeration over budget, f1 not compared";
    }
    return r;
}

CheckResult golden_check()
{
    CheckResult r{"m0n-golden", CheckStatus::Pass, ""};
    const std::uint64_t expected[] = {3, 10, 25, 56};
    for (int m = 1; m <= 4; ++m) {
        auto g = make_geometry(m, 1, 3, 0, SpaceKind::XDBracket);
        auto got = count_divisors(g);
        if (got != expected[m - 1]) {
            r.status = CheckStatus::Fail;
            r.detail = "m=" + std::to_string(m) + ": " + std::to_string(got) + " divisors, expected " +
                       std::to_string(expected[m - 1]);
            return r;
        }
    }
    auto f = f_vector(make_geometry(2, 1, 3, 0, SpaceKind::XDBracket));
    if (f != std::vector<std::uint64_t>{1, 10, 15}) {
        r.status = CheckStatus::Fail;
        r.detail = "m=2 f-vector differs from 1,10,15";
        return r;
    }
    r.detail = "counts 3,10,25,56; f-vector 1,10,15";
    return r;
}

CheckResult fiber_check(const GeometryConfig& g, int workers)
{
    CheckResult r{"fiber-round-trip", CheckStatus::Pass, ""};
    EnumerationOptions opts;
    opts.workers = workers;
    std::vector<NestedSet> all;
    try {
        all = enumerate_nested_sets(g, opts);
    } catch (const BudgetExceeded&) {
        r.status = CheckStatus::Skip;
        r.detail = "enumeration over budget";
        return r;
    }
    for (const auto& ns : all) {
        auto t = fiber_tree(ns);
        if (auto s = is_stable(t); !s.stable) {
            r.status = CheckStatus::Fail;
            r.detail = "unstable fiber for " + ns.to_string();
            return r;
        }
        if (!(tree_to_nested(t) == ns)) {
            r.status = CheckStatus::Fail;
            r.detail = "round trip changed " + ns.to_string();
            return r;
        }
    }
    r.detail = std::to_string(all.size()) + " nested sets";
    return r;
}

CheckResult mixed_pair_check(const GeometryConfig& g)
{
    CheckResult r{"mixed-pair-certificates", CheckStatus::Pass, ""};
    if (g.space != SpaceKind::XDBracket || g.component_count() == 0) {
        r.status = CheckStatus::Skip;
        r.detail = "needs X_D[n] with components";
        return r;
    }
    if (g.n > 6) {
        r.status = CheckStatus::Skip;
        r.detail = "n > 6";
        return r;
    }
    std::size_t count = 0;
    auto divisors = all_divisors(g);
    for (const auto& a : divisors) {
        if (!a.is_d())
            continue;
        for (const auto& b : divisors) {
            if (!b.is_delta() || !a.subset().intersects(b.subset()) || b.subset().is_subset_of(a.subset()))
                continue;
            if (!certify_disjoint(g, a, b)) {
                r.status = CheckStatus::Fail;
                r.detail = "no separating center for " + a.label() + ", " + b.label();
                return r;
            }
            ++count;
        }
    }
    r.detail = std::to_string(count) + " pairs certified";
    return r;
}

CheckResult section_check(const GeometryConfig& g)
{
    CheckResult r{"section-disjointness", CheckStatus::Pass, ""};
    auto s = sections_disjoint_check(g);
    if (!s.ok) {
        r.status = CheckStatus::Fail;
        r.detail = "a section meets a D-locus section";
    } else {
        r.detail = std::to_string(s.certificates.size()) + " certificates";
    }
    return r;
}

} // namespace

std::vector<CheckResult> run_certification(const GeometryConfig& g, int workers)
{
    g.validate();
    std::vector<CheckResult> out;
    auto staged = building_set_for(g);
    if (g.space != SpaceKind::FM && g.component_count() > 0)
        out.push_back(oracle_check(staged.first_stage, g, "flag-oracle-d-loci"));
    if (g.space == SpaceKind::FM)
        out.push_back(oracle_check(staged.second_stage, g, "flag-oracle-diagonals"));
    out.push_back(counts_check(g, workers));
    out.push_back(golden_check());
    out.push_back(fiber_check(g, workers));
    out.push_back(mixed_pair_check(g));
    out.push_back(section_check(g));
    return out;
}

} // namespace wonderful
