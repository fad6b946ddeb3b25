#include "wonderful/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wonderful {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = static_cast<int>(images_.size());
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation images must form a bijection of {1.." + std::to_string(n) + "}");
        hit[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const
{
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (int start = 1; start <= population(); ++start) {
        if (done[static_cast<std::size_t>(start - 1)] || image(start) == start)
            continue;
        out += '(';
        for (int i = start; !done[static_cast<std::size_t>(i - 1)]; i = image(i)) {
            if (i != start)
                out += ' ';
            out += std::to_string(i);
            done[static_cast<std::size_t>(i - 1)] = true;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q)
{
    if (p.population() != q.population())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> images(q.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = p.images_[static_cast<std::size_t>(q.images_[i] - 1)];
    return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' in cycle notation \"" + std::string(text) + "\"");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("malformed cycle notation \"" + std::string(text) + "\"");
            int v = std::stoi(std::string(text.substr(start, pos - start)));
            if (v < 1 || v > n)
                throw std::invalid_argument("cycle entry " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
            if (used[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("cycle entry " + std::to_string(v) + " repeated");
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v);
            skip();
            if (pos < text.size() && text[pos] == ',')
                ++pos;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n)
{
    if (n > 10)
        throw std::invalid_argument("refusing to list n! permutations for n > 10");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

IndexSubset act(const Permutation& p, const IndexSubset& s)
{
    if (p.population() != s.population())
        throw std::invalid_argument("act: permutation of " + std::to_string(p.population()) +
                                    " letters on a subset of {1.." + std::to_string(s.population()) + "}");
    std::vector<int> moved;
    for (int i : s.members())
        moved.push_back(p.image(i));
    return IndexSubset::from_members(s.population(), moved);
}

Partition act(const Permutation& p, const Partition& q)
{
    std::vector<IndexSubset> blocks;
    for (std::size_t k = 0; k < q.block_count(); ++k)
        blocks.push_back(act(p, q.block(k)));
    return Partition::from_blocks(q.population(), blocks);
}

Center act(const Permutation& p, const Center& c)
{
    if (c.is_d_locus())
        return Center::d_locus(c.component(), act(p, c.subset()));
    return Center::diagonal(act(p, c.partition()));
}

BoundaryDivisor act(const Permutation& p, const BoundaryDivisor& d)
{
    if (d.is_d())
        return BoundaryDivisor::d_tilde(d.component(), act(p, d.subset()));
    return BoundaryDivisor::delta_tilde(act(p, d.subset()));
}

NestedSet act(const Permutation& p, const NestedSet& ns)
{
    std::vector<BoundaryDivisor> moved;
    for (const auto& d : ns.divisors())
        moved.push_back(act(p, d));
    return NestedSet(ns.geometry(), std::move(moved));
}

DegenerationTree act(const Permutation& p, const DegenerationTree& t)
{
    if (p.population() != t.geometry.n)
        throw std::invalid_argument("act: permutation size does not match the tree");
    DegenerationTree out = t;
    for (auto& v : out.vertices) {
        for (int& m : v.markings)
            m = p.image(m);
        std::sort(v.markings.begin(), v.markings.end());
    }
    return out;
}

std::vector<Orbit> orbits(const GeometryConfig& g, OrbitKind kind, int k)
{
    auto perms = all_permutations(g.n);
    std::vector<std::vector<BoundaryDivisor>> items;
    if (kind == OrbitKind::Divisors) {
        for (const auto& d : all_divisors(g))
            items.push_back({d});
    } else {
        EnumerationOptions opts;
        opts.max_size = k;
        for (const auto& ns : enumerate_nested_sets(g, opts))
            if (static_cast<int>(ns.size()) == k)
                items.push_back(ns.divisors());
    }
    std::map<std::vector<BoundaryDivisor>, std::uint64_t> by_rep;
    for (const auto& item : items) {
        std::vector<BoundaryDivisor> best;
        for (const auto& p : perms) {
            std::vector<BoundaryDivisor> moved;
            for (const auto& d : item)
                moved.push_back(act(p, d));
            std::sort(moved.begin(), moved.end());
            if (best.empty() || moved < best)
                best = std::move(moved);
        }
        ++by_rep[best];
    }
    std::vector<Orbit> out;
    for (auto& [rep, size] : by_rep)
        out.push_back({rep, size});
    return out;
}

std::uint64_t stabilizer_order(const NestedSet& ns)
{
    std::uint64_t count = 0;
    for (const auto& p : all_permutations(ns.geometry().n))
        if (act(p, ns) == ns)
            ++count;
    return count;
}

} // namespace wonderful
