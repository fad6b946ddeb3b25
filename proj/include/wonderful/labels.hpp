#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wonderful {

inline constexpr int kMaxPoints = 64;

/// A subset of N = {1, ..., n}, stored as a bitmask (bit i-1 <-> element i).
///
/// Ordering is the canonical total order used everywhere for deterministic
/// output: first by cardinality, then lexicographically on the sorted
/// member lists.
class IndexSubset {
public:
    IndexSubset() = default;
    IndexSubset(int n, std::uint64_t bits);

    static IndexSubset of(int n, std::initializer_list<int> members);
    static IndexSubset from_members(int n, const std::vector<int>& members);
    static IndexSubset full(int n);
    static IndexSubset singleton(int n, int i) { return of(n, {i}); }

    int population() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const;
    bool is_subset_of(const IndexSubset& other) const;
    bool intersects(const IndexSubset& other) const;
    int min_member() const;
    int max_member() const;
    std::vector<int> members() const;

    IndexSubset operator|(const IndexSubset& o) const;
    IndexSubset operator&(const IndexSubset& o) const;
    IndexSubset operator-(const IndexSubset& o) const;

    /// "{1,3,5}"; the empty set prints as "{}".
    std::string to_string() const;

    friend bool operator==(const IndexSubset& a, const IndexSubset& b) = default;
    friend std::strong_ordering operator<=>(const IndexSubset& a, const IndexSubset& b);

private:
    void check_same_population(const IndexSubset& o) const;

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// Parses "{1,3,5}" (whitespace tolerated) over population n.
IndexSubset parse_subset(std::string_view text, int n);

/// s ∪ {n+1} over population n+1.
IndexSubset plus_label(const IndexSubset& s);

enum class SubsetRelation { Equal, AInB, BInA, Disjoint, Overlapping };

SubsetRelation subset_relation(const IndexSubset& a, const IndexSubset& b);
std::string_view to_string(SubsetRelation r);

/// A set partition of {1, ..., n}. Blocks are kept sorted by least element;
/// singletons are stored but omitted by support() and to_string().
class Partition {
public:
    Partition() = default;

    static Partition discrete(int n);
    static Partition one_block(int n);
    /// Blocks must be pairwise disjoint; uncovered elements become singletons.
    static Partition from_blocks(int n, const std::vector<IndexSubset>& blocks);
    /// The partition with a single non-singleton block I.
    static Partition simple(const IndexSubset& block);

    int population() const { return n_; }
    const std::vector<std::uint64_t>& block_bits() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    IndexSubset block(std::size_t k) const { return {n_, blocks_[k]}; }
    /// Index of the block containing element i (1-based element).
    std::size_t block_of(int i) const;
    std::vector<IndexSubset> support() const;
    bool is_discrete() const { return static_cast<int>(blocks_.size()) == n_; }
    /// True when every block of *this lies inside a block of coarser.
    bool refines(const Partition& coarser) const;

    /// "{{1,2},{3,4}}" listing only non-singleton blocks.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    Partition(int n, std::vector<std::uint64_t> blocks);
    void canonicalize();

    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

/// Partition whose polydiagonal is the intersection of the two polydiagonals:
/// the join of the equivalence relations.
Partition meet(const Partition& a, const Partition& b);

/// Parses "{{1,2},{3}}"; singleton blocks may be omitted.
Partition parse_partition(std::string_view text, int n);

/// All set partitions of {1..n} in a deterministic order.
std::vector<Partition> all_partitions(int n);

/// All nonempty subsets of {1..n} with at least min_size members, canonical order.
std::vector<IndexSubset> subsets_of_size_at_least(int n, int min_size);

} // namespace wonderful
