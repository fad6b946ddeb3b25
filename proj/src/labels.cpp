#include "wonderful/labels.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wonderful {

namespace {

std::uint64_t low_mask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_population(int n)
{
    if (n < 0 || n > kMaxPoints)
        throw std::invalid_argument("population must lie in [0, 64], got " + std::to_string(n));
}

class DisjointSet {
public:
    explicit DisjointSet(int size) : parent_(size), rank_(size, 0)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return;
        if (rank_[x] < rank_[y])
            std::swap(x, y);
        parent_[y] = x;
        if (rank_[x] == rank_[y])
            ++rank_[x];
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

void skip_space(std::string_view text, std::size_t& pos)
{
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
}

void expect(std::string_view text, std::size_t& pos, char c)
{
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument("expected '" + std::string(1, c) + "' at offset " + std::to_string(pos) +
                                    " in \"" + std::string(text) + "\"");
    ++pos;
}

bool peek(std::string_view text, std::size_t& pos, char c)
{
    skip_space(text, pos);
    return pos < text.size() && text[pos] == c;
}

IndexSubset parse_subset_at(std::string_view text, std::size_t& pos, int n)
{
    expect(text, pos, '{');
    std::vector<int> members;
    if (!peek(text, pos, '}')) {
        for (;;) {
            skip_space(text, pos);
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("expected an integer at offset " + std::to_string(start) + " in \"" +
                                            std::string(text) + "\"");
            members.push_back(std::stoi(std::string(text.substr(start, pos - start))));
            if (peek(text, pos, ','))
                ++pos;
            else
                break;
        }
    }
    expect(text, pos, '}');
    for (std::size_t i = 1; i < members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (members[i] == members[j])
                throw std::invalid_argument("duplicate element " + std::to_string(members[i]) + " in subset");
    return IndexSubset::from_members(n, members);
}

} // namespace

IndexSubset::IndexSubset(int n, std::uint64_t bits) : n_(n), bits_(bits)
{
    check_population(n);
    if ((bits & ~low_mask(n)) != 0)
        throw std::invalid_argument("subset has members outside {1.." + std::to_string(n) + "}");
}

IndexSubset IndexSubset::of(int n, std::initializer_list<int> members)
{
    return from_members(n, std::vector<int>(members));
}

IndexSubset IndexSubset::from_members(int n, const std::vector<int>& members)
{
    check_population(n);
    std::uint64_t bits = 0;
    for (int i : members) {
        if (i < 1 || i > n)
            throw std::invalid_argument("element " + std::to_string(i) + " outside {1.." + std::to_string(n) + "}");
        bits |= std::uint64_t{1} << (i - 1);
    }
    return {n, bits};
}

IndexSubset IndexSubset::full(int n)
{
    check_population(n);
    return {n, low_mask(n)};
}

int IndexSubset::size() const { return std::popcount(bits_); }

bool IndexSubset::contains(int i) const
{
    return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1U) != 0;
}

bool IndexSubset::is_subset_of(const IndexSubset& other) const
{
    check_same_population(other);
    return (bits_ & ~other.bits_) == 0;
}

bool IndexSubset::intersects(const IndexSubset& other) const
{
    check_same_population(other);
    return (bits_ & other.bits_) != 0;
}

int IndexSubset::min_member() const
{
    if (bits_ == 0)
        throw std::logic_error("min_member of empty subset");
    return std::countr_zero(bits_) + 1;
}

int IndexSubset::max_member() const
{
    if (bits_ == 0)
        throw std::logic_error("max_member of empty subset");
    return 64 - std::countl_zero(bits_);
}

std::vector<int> IndexSubset::members() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

IndexSubset IndexSubset::operator|(const IndexSubset& o) const
{
    check_same_population(o);
    return {n_, bits_ | o.bits_};
}

IndexSubset IndexSubset::operator&(const IndexSubset& o) const
{
    check_same_population(o);
    return {n_, bits_ & o.bits_};
}

IndexSubset IndexSubset::operator-(const IndexSubset& o) const
{
    check_same_population(o);
    return {n_, bits_ & ~o.bits_};
}

std::string IndexSubset::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (int i : members()) {
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

void IndexSubset::check_same_population(const IndexSubset& o) const
{
    if (n_ != o.n_)
        throw std::invalid_argument("subset population mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(o.n_));
}

std::strong_ordering operator<=>(const IndexSubset& a, const IndexSubset& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    if (a.bits_ == b.bits_)
        return std::strong_ordering::equal;
    // Equal cardinality: the lexicographically smaller member list owns the
    // lowest element of the symmetric difference.
    std::uint64_t diff = a.bits_ ^ b.bits_;
    std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

IndexSubset parse_subset(std::string_view text, int n)
{
    std::size_t pos = 0;
    IndexSubset s = parse_subset_at(text, pos, n);
    skip_space(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in subset \"" + std::string(text) + "\"");
    return s;
}

IndexSubset plus_label(const IndexSubset& s)
{
    int n = s.population();
    if (n + 1 > kMaxPoints)
        throw std::invalid_argument("plus_label would exceed 64 points");
    return {n + 1, s.bits() | (std::uint64_t{1} << n)};
}

SubsetRelation subset_relation(const IndexSubset& a, const IndexSubset& b)
{
    if (a.population() != b.population())
        throw std::invalid_argument("subset_relation: population mismatch");
    if (a == b)
        return SubsetRelation::Equal;
    if (a.is_subset_of(b))
        return SubsetRelation::AInB;
    if (b.is_subset_of(a))
        return SubsetRelation::BInA;
    if (!a.intersects(b))
        return SubsetRelation::Disjoint;
    return SubsetRelation::Overlapping;
}

std::string_view to_string(SubsetRelation r)
{
    switch (r) {
    case SubsetRelation::Equal: return "equal";
    case SubsetRelation::AInB: return "a-in-b";
    case SubsetRelation::BInA: return "b-in-a";
    case SubsetRelation::Disjoint: return "disjoint";
    case SubsetRelation::Overlapping: return "overlapping";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(int n, std::vector<std::uint64_t> blocks) : n_(n), blocks_(std::move(blocks))
{
    canonicalize();
}

void Partition::canonicalize()
{
    std::sort(blocks_.begin(), blocks_.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
}

Partition Partition::discrete(int n)
{
    check_population(n);
    std::vector<std::uint64_t> blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i)
        blocks.push_back(std::uint64_t{1} << i);
    return {n, std::move(blocks)};
}

Partition Partition::one_block(int n)
{
    check_population(n);
    if (n == 0)
        return {0, {}};
    return {n, {low_mask(n)}};
}

Partition Partition::from_blocks(int n, const std::vector<IndexSubset>& blocks)
{
    check_population(n);
    std::uint64_t covered = 0;
    std::vector<std::uint64_t> out;
    for (const auto& b : blocks) {
        if (b.population() != n)
            throw std::invalid_argument("partition block population mismatch");
        if (b.empty())
            throw std::invalid_argument("partition blocks must be nonempty");
        if ((covered & b.bits()) != 0)
            throw std::invalid_argument("partition blocks overlap");
        covered |= b.bits();
        out.push_back(b.bits());
    }
    for (std::uint64_t rest = low_mask(n) & ~covered; rest != 0; rest &= rest - 1)
        out.push_back(rest & (~rest + 1));
    return {n, std::move(out)};
}

Partition Partition::simple(const IndexSubset& block)
{
    return from_blocks(block.population(), {block});
}

std::size_t Partition::block_of(int i) const
{
    if (i < 1 || i > n_)
        throw std::invalid_argument("element outside partition population");
    std::uint64_t bit = std::uint64_t{1} << (i - 1);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        if ((blocks_[k] & bit) != 0)
            return k;
    throw std::logic_error("partition does not cover element");
}

std::vector<IndexSubset> Partition::support() const
{
    std::vector<IndexSubset> out;
    for (std::uint64_t b : blocks_)
        if (std::popcount(b) >= 2)
            out.emplace_back(n_, b);
    return out;
}

bool Partition::refines(const Partition& coarser) const
{
    if (n_ != coarser.n_)
        throw std::invalid_argument("refines: population mismatch");
    for (std::uint64_t b : blocks_) {
        bool inside = false;
        for (std::uint64_t c : coarser.blocks_)
            if ((b & ~c) == 0) {
                inside = true;
                break;
            }
        if (!inside)
            return false;
    }
    return true;
}

std::string Partition::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& b : support()) {
        if (!first)
            out += ',';
        out += b.to_string();
        first = false;
    }
    return out + "}";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    // Coarser partitions (fewer blocks) first, then by block lists.
    if (auto c = b.blocks_.size() <=> a.blocks_.size(); c != 0)
        return c;
    return a.blocks_ <=> b.blocks_;
}

Partition meet(const Partition& a, const Partition& b)
{
    if (a.population() != b.population())
        throw std::invalid_argument("meet: population mismatch (" + std::to_string(a.population()) + " vs " +
                                    std::to_string(b.population()) + ")");
    int n = a.population();
    DisjointSet sets(n);
    for (const auto* p : {&a, &b})
        for (std::uint64_t block : p->block_bits()) {
            int first = std::countr_zero(block);
            for (std::uint64_t rest = block & (block - 1); rest != 0; rest &= rest - 1)
                sets.unite(first, std::countr_zero(rest));
        }
    std::vector<std::uint64_t> by_root(n, 0);
    for (int i = 0; i < n; ++i)
        by_root[sets.find(i)] |= std::uint64_t{1} << i;
    std::vector<IndexSubset> blocks;
    for (std::uint64_t bits : by_root)
        if (bits != 0)
            blocks.emplace_back(n, bits);
    return Partition::from_blocks(n, blocks);
}

Partition parse_partition(std::string_view text, int n)
{
    std::size_t pos = 0;
    std::vector<IndexSubset> blocks;
    expect(text, pos, '{');
    if (!peek(text, pos, '}')) {
        for (;;) {
            blocks.push_back(parse_subset_at(text, pos, n));
            if (peek(text, pos, ','))
                ++pos;
            else
                break;
        }
    }
    expect(text, pos, '}');
    skip_space(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in partition \"" + std::string(text) + "\"");
    return Partition::from_blocks(n, blocks);
}

std::vector<Partition> all_partitions(int n)
{
    check_population(n);
    // Restricted growth strings: element i joins an existing block or opens one.
    std::vector<Partition> out;
    std::vector<std::uint64_t> blocks;
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<IndexSubset> subs;
            for (auto b : blocks)
                subs.emplace_back(n, b);
            out.push_back(Partition::from_blocks(n, subs));
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k] |= bit;
            self(self, i + 1);
            blocks[k] &= ~bit;
        }
        blocks.push_back(bit);
        self(self, i + 1);
        blocks.pop_back();
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSubset> subsets_of_size_at_least(int n, int min_size)
{
    check_population(n);
    if (n > 30)
        throw std::invalid_argument("refusing to list all subsets for n > 30");
    std::vector<IndexSubset> out;
    for (std::uint64_t bits = 1; bits <= low_mask(n); ++bits)
        if (std::popcount(bits) >= min_size)
            out.emplace_back(n, bits);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wonderful
