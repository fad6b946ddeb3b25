#include "wonderful/nested_sets.hpp"

#include "wonderful/blowup_orders.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>

namespace wonderful {

// ---------------------------------------------------------------------------
// BoundaryDivisor

BoundaryDivisor BoundaryDivisor::d_tilde(int component, const IndexSubset& s)
{
    if (component < 0)
        throw std::invalid_argument("component index must be nonnegative");
    if (s.empty())
        throw std::invalid_argument("D-divisor needs |S| >= 1");
    BoundaryDivisor d;
    d.kind_ = Kind::DTilde;
    d.component_ = component;
    d.subset_ = s;
    return d;
}

BoundaryDivisor BoundaryDivisor::delta_tilde(const IndexSubset& i)
{
    if (i.size() < 2)
        throw std::invalid_argument("diagonal divisor needs |I| >= 2, got " + i.to_string());
    BoundaryDivisor d;
    d.kind_ = Kind::DeltaTilde;
    d.subset_ = i;
    return d;
}

BoundaryDivisor BoundaryDivisor::from_center(const Center& c)
{
    if (c.is_d_locus())
        return d_tilde(c.component(), c.subset());
    if (!c.is_simple_diagonal())
        throw std::invalid_argument("polydiagonal " + c.label() + " does not label a boundary divisor");
    return delta_tilde(c.subset());
}

Center BoundaryDivisor::to_center() const
{
    return is_d() ? Center::d_locus(component_, subset_) : Center::diagonal(subset_);
}

void BoundaryDivisor::validate(const GeometryConfig& g) const
{
    if (population() != g.n)
        throw std::invalid_argument("divisor " + label() + " is over " + std::to_string(population()) +
                                    " points, geometry has n = " + std::to_string(g.n));
    if (is_d()) {
        if (g.space == SpaceKind::FM)
            throw std::invalid_argument("divisor " + label() + " does not exist on X[n]");
        if (component_ >= g.component_count())
            throw std::invalid_argument("divisor " + label() + " names a component the geometry lacks");
    } else if (g.space == SpaceKind::XDUpper) {
        throw std::invalid_argument("divisor " + label() + " does not exist on X_D^[n]");
    }
}

std::strong_ordering operator<=>(const BoundaryDivisor& a, const BoundaryDivisor& b)
{
    if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0)
        return c;
    if (auto c = a.component_ <=> b.component_; c != 0)
        return c;
    return a.subset_ <=> b.subset_;
}

BoundaryDivisor parse_divisor(std::string_view text, int n)
{
    return BoundaryDivisor::from_center(parse_center(text, n));
}

bool compatible(const BoundaryDivisor& a, const BoundaryDivisor& b)
{
    const IndexSubset& s = a.subset();
    const IndexSubset& t = b.subset();
    if (s.population() != t.population())
        throw std::invalid_argument("compatible: divisors over different populations");
    if (a.is_d() && b.is_d()) {
        if (a.component() != b.component())
            return !s.intersects(t);
        return s.is_subset_of(t) || t.is_subset_of(s);
    }
    if (a.is_delta() && b.is_delta())
        return !s.intersects(t) || s.is_subset_of(t) || t.is_subset_of(s);
    const IndexSubset& d_set = a.is_d() ? s : t;
    const IndexSubset& delta_set = a.is_d() ? t : s;
    return !d_set.intersects(delta_set) || delta_set.is_subset_of(d_set);
}

bool is_nested(const GeometryConfig& g, std::span<const BoundaryDivisor> divisors)
{
    for (const auto& d : divisors)
        d.validate(g);
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j)
            if (divisors[i] != divisors[j] && !compatible(divisors[i], divisors[j]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// NestedSet

NestedSet::NestedSet(std::shared_ptr<const GeometryConfig> geometry, std::vector<BoundaryDivisor> divisors)
    : geometry_(std::move(geometry)), divisors_(std::move(divisors))
{
    std::sort(divisors_.begin(), divisors_.end());
    divisors_.erase(std::unique(divisors_.begin(), divisors_.end()), divisors_.end());
    if (!is_nested(*geometry_, divisors_))
        throw std::invalid_argument("collection " + to_string() + " is not nested");
}

NestedSet::NestedSet(const GeometryConfig& geometry, std::vector<BoundaryDivisor> divisors)
    : NestedSet(std::make_shared<const GeometryConfig>(geometry), std::move(divisors))
{
}

std::string NestedSet::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        if (i != 0)
            out += ',';
        out += '"' + divisors_[i].label() + '"';
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<BoundaryDivisor> all_divisors(const GeometryConfig& g)
{
    g.validate();
    std::vector<BoundaryDivisor> out;
    if (g.n == 0)
        return out;
    if (g.space != SpaceKind::FM)
        for (int c = 0; c < g.component_count(); ++c)
            for (const auto& s : subsets_of_size_at_least(g.n, 1))
                out.push_back(BoundaryDivisor::d_tilde(c, s));
    if (g.space != SpaceKind::XDUpper)
        for (const auto& s : subsets_of_size_at_least(g.n, 2))
            out.push_back(BoundaryDivisor::delta_tilde(s));
    return out;
}

std::uint64_t count_divisors(const GeometryConfig& g)
{
    g.validate();
    if (g.n >= 64)
        throw std::invalid_argument("count_divisors: n too large for a 64-bit count");
    const std::uint64_t subsets = (std::uint64_t{1} << g.n) - 1;
    const std::uint64_t d_part = static_cast<std::uint64_t>(g.component_count()) * subsets;
    const std::uint64_t delta_part = g.n >= 1 ? subsets - static_cast<std::uint64_t>(g.n) : 0;
    switch (g.space) {
    case SpaceKind::XDUpper: return d_part;
    case SpaceKind::XDBracket: return d_part + delta_part;
    case SpaceKind::FM: return delta_part;
    }
    return 0;
}

namespace {

using Bitset = std::vector<std::uint64_t>;

struct Search {
    std::vector<Bitset> compat; // compat[i] has bit j iff divisors i, j may coexist
    std::size_t words = 0;
    std::optional<int> max_size;

    /// Visits every nested set whose smallest index is `first`, in depth-first preorder.
    template <typename Visit>
    void from(std::size_t first, Visit&& visit) const
    {
        if (max_size && *max_size < 1)
            return;
        std::vector<std::uint16_t> chosen{static_cast<std::uint16_t>(first)};
        Bitset allowed = compat[first];
        recurse(chosen, allowed, first + 1, visit);
    }

    template <typename Visit>
    void recurse(std::vector<std::uint16_t>& chosen, const Bitset& allowed, std::size_t start, Visit& visit) const
    {
        visit(chosen, allowed);
        if (max_size && static_cast<int>(chosen.size()) >= *max_size)
            return;
        for (std::size_t w = start / 64; w < words; ++w) {
            std::uint64_t bits = allowed[w];
            if (w == start / 64)
                bits &= ~std::uint64_t{0} << (start % 64);
            for (; bits != 0; bits &= bits - 1) {
                std::size_t next = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                Bitset narrowed(words);
                for (std::size_t k = 0; k < words; ++k)
                    narrowed[k] = allowed[k] & compat[next][k];
                chosen.push_back(static_cast<std::uint16_t>(next));
                recurse(chosen, narrowed, next + 1, visit);
                chosen.pop_back();
            }
        }
    }
};

Search prepare(const std::vector<BoundaryDivisor>& divisors, const EnumerationOptions& opts)
{
    if (divisors.size() > 65535)
        throw BudgetExceeded("too many divisors to index");
    if (static_cast<int>(divisors.size()) > opts.divisor_limit && !(opts.max_size && *opts.max_size <= 2))
        throw BudgetExceeded("exhaustive enumeration refused: " + std::to_string(divisors.size()) +
                             " divisors exceeds the limit of " + std::to_string(opts.divisor_limit) +
                             " (pass max_size <= 2 or raise the limit)");
    Search s;
    s.words = (divisors.size() + 63) / 64;
    s.max_size = opts.max_size;
    s.compat.assign(divisors.size(), Bitset(s.words, 0));
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = 0; j < divisors.size(); ++j)
            if (i != j && compatible(divisors[i], divisors[j]))
                s.compat[i][j / 64] |= std::uint64_t{1} << (j % 64);
    return s;
}

/// Runs `per_first(first)` for every first index, spread across workers, and
/// returns the results in first-index order.
template <typename Result, typename Fn>
std::vector<Result> split_by_first(std::size_t count, int workers, Fn per_first)
{
    std::vector<Result> results(count);
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t f = 0; f < count; ++f)
            results[f] = per_first(f);
        return results;
    }
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t f = static_cast<std::size_t>(w); f < count; f += static_cast<std::size_t>(workers))
                results[f] = per_first(f);
        }));
    for (auto& j : jobs)
        j.get();
    return results;
}

struct Found {
    std::vector<std::vector<std::uint16_t>> sets;
    std::vector<bool> maximal;
};

Found collect(const EnumerationOptions& opts, const std::vector<BoundaryDivisor>& divisors)
{
    Search s = prepare(divisors, opts);
    // `allowed` is every divisor compatible with all chosen ones; compat has no
    // self loops, so a set is maximal exactly when it is empty.
    auto is_max = [](const Bitset& allowed) {
        return std::all_of(allowed.begin(), allowed.end(), [](std::uint64_t w) { return w == 0; });
    };
    auto parts = split_by_first<Found>(divisors.size(), opts.workers, [&](std::size_t first) {
        Found f;
        s.from(first, [&](const std::vector<std::uint16_t>& chosen, const Bitset& allowed) {
            f.sets.push_back(chosen);
            f.maximal.push_back(is_max(allowed));
        });
        return f;
    });
    Found all;
    all.sets.emplace_back();
    all.maximal.push_back(divisors.empty());
    for (auto& p : parts) {
        all.sets.insert(all.sets.end(), p.sets.begin(), p.sets.end());
        all.maximal.insert(all.maximal.end(), p.maximal.begin(), p.maximal.end());
    }
    return all;
}

std::vector<NestedSet> materialize(const GeometryConfig& g, const std::vector<BoundaryDivisor>& divisors,
                                   const Found& found, bool only_maximal)
{
    auto shared = std::make_shared<const GeometryConfig>(g);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < found.sets.size(); ++i)
        if (!only_maximal || found.maximal[i])
            order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return found.sets[a].size() < found.sets[b].size(); });
    std::vector<NestedSet> out;
    out.reserve(order.size());
    for (std::size_t i : order) {
        std::vector<BoundaryDivisor> ds;
        for (auto idx : found.sets[i])
            ds.push_back(divisors[idx]);
        out.emplace_back(shared, std::move(ds));
    }
    return out;
}

} // namespace

std::vector<NestedSet> enumerate_nested_sets(const GeometryConfig& g, const EnumerationOptions& opts)
{
    auto divisors = all_divisors(g);
    return materialize(g, divisors, collect(opts, divisors), false);
}

std::vector<NestedSet> maximal_nested_sets(const GeometryConfig& g, const EnumerationOptions& opts)
{
    if (opts.max_size)
        throw std::invalid_argument("maximal_nested_sets: max_size would truncate facets");
    auto divisors = all_divisors(g);
    return materialize(g, divisors, collect(opts, divisors), true);
}

std::vector<std::uint64_t> f_vector(const GeometryConfig& g, const EnumerationOptions& opts)
{
    auto divisors = all_divisors(g);
    Search s = prepare(divisors, opts);
    using Counts = std::vector<std::uint64_t>;
    auto parts = split_by_first<Counts>(divisors.size(), opts.workers, [&](std::size_t first) {
        Counts c;
        s.from(first, [&](const std::vector<std::uint16_t>& chosen, const Bitset&) {
            if (c.size() <= chosen.size())
                c.resize(chosen.size() + 1, 0);
            ++c[chosen.size()];
        });
        return c;
    });
    Counts total{1};
    for (const auto& p : parts) {
        if (total.size() < p.size())
            total.resize(p.size(), 0);
        for (std::size_t k = 0; k < p.size(); ++k)
            total[k] += p[k];
    }
    return total;
}

// ---------------------------------------------------------------------------
// Disjointness certificates

std::optional<DisjointnessCertificate> certify_disjoint(const GeometryConfig& g, const BoundaryDivisor& a,
                                                        const BoundaryDivisor& b)
{
    if (g.space != SpaceKind::XDBracket)
        throw std::invalid_argument("certify_disjoint needs X_D[n]");
    a.validate(g);
    b.validate(g);
    if (a.is_d() == b.is_d())
        throw std::invalid_argument("certify_disjoint expects one D-divisor and one diagonal divisor");
    const BoundaryDivisor& d = a.is_d() ? a : b;
    const BoundaryDivisor& delta = a.is_d() ? b : a;
    if (!d.subset().intersects(delta.subset()) || delta.subset().is_subset_of(d.subset()))
        throw std::invalid_argument("certify_disjoint: pair " + d.label() + ", " + delta.label() +
                                    " is nested, nothing to certify");

    const Center dc = d.to_center();
    const Center deltac = delta.to_center();
    auto order = generate_order(g, OrderScheme::Interleaved).centers;
    for (const auto& [v1, v2] : {std::pair{dc, deltac}, std::pair{deltac, dc}})
        for (std::size_t p = 0; p < order.size(); ++p) {
            const Center& z = order[p];
            if (z == v1 || z == v2)
                continue;
            if (separates(v1, v2, z, g))
                return DisjointnessCertificate{v1, v2, z, p};
        }
    return std::nullopt;
}

} // namespace wonderful
