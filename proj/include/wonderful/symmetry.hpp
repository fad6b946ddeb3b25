#pragma once

#include "wonderful/degenerations.hpp"
#include "wonderful/nested_sets.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wonderful {

/// A bijection of {1..n}; image(i) is 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int population() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Cycle notation, "()" for the identity.
    std::string to_string() const;

    /// (p * q)(i) = p(q(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Cycle notation such as "(1 2)(3 4)"; fixed points may be omitted.
Permutation parse_cycles(std::string_view text, int n);

/// All n! permutations in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

IndexSubset act(const Permutation& p, const IndexSubset& s);
Partition act(const Permutation& p, const Partition& q);
Center act(const Permutation& p, const Center& c);
BoundaryDivisor act(const Permutation& p, const BoundaryDivisor& d);
NestedSet act(const Permutation& p, const NestedSet& ns);
DegenerationTree act(const Permutation& p, const DegenerationTree& t);

enum class OrbitKind { Divisors, NestedK };

struct Orbit {
    std::vector<BoundaryDivisor> representative; // one divisor for Divisors
    std::uint64_t size = 0;
};

/// S_n orbits on divisors, or on nested sets of size k. Representatives are
/// the canonically smallest members; orbits are listed by representative.
std::vector<Orbit> orbits(const GeometryConfig& g, OrbitKind kind, int k = 1);

/// Order of the subgroup of S_n fixing ns as a set of divisors.
std::uint64_t stabilizer_order(const NestedSet& ns);

} // namespace wonderful
