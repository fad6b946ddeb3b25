#include "wonderful/symmetry.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace wonderful;

namespace {

BoundaryDivisor Dt(int c, std::initializer_list<int> s, int n) { return BoundaryDivisor::d_tilde(c, IndexSubset::of(n, s)); }
BoundaryDivisor Delt(std::initializer_list<int> s, int n) { return BoundaryDivisor::delta_tilde(IndexSubset::of(n, s)); }

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

} // namespace

TEST_CASE("permutation basics")
{
    auto p = parse_cycles("(1 2)", 3);
    CHECK(p.images() == std::vector<int>{2, 1, 3});
    CHECK(p.to_string() == "(1 2)");
    CHECK(Permutation::identity(4).to_string() == "()");
    auto q = parse_cycles("(1 2 3)", 3);
    CHECK((q * q.inverse()) == Permutation::identity(3));
    CHECK((p * q).image(1) == p.image(q.image(1)));
    CHECK(parse_cycles("(1,3)(2 4)", 4).to_string() == "(1 3)(2 4)");
    CHECK_THROWS(parse_cycles("(1 1)", 3));
    CHECK_THROWS(parse_cycles("(1 4)", 3));
    CHECK_THROWS(Permutation({1, 1, 2}));
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("action examples")
{
    CHECK(act(parse_cycles("(1 2)", 3), Dt(0, {1, 3}, 3)) == Dt(0, {2, 3}, 3));
    CHECK(act(Permutation::identity(3), Dt(1, {1, 3}, 3)) == Dt(1, {1, 3}, 3));
    CHECK(act(parse_cycles("(1 2 3)", 3), Delt({1, 2}, 3)) == Delt({2, 3}, 3));
    auto poly = Center::diagonal(parse_partition("{{1,2},{3,4}}", 4));
    CHECK(act(parse_cycles("(2 3)", 4), poly).label() == "Delta:{{1,3},{2,4}}");
}

TEST_CASE("the action is a group action")
{
    auto g = support::geometry(4, 1, 1, 0);
    auto perms = all_permutations(4);
    auto ds = all_divisors(g);
    for (std::size_t a = 0; a < perms.size(); a += 5)
        for (std::size_t b = 0; b < perms.size(); b += 7)
            for (const auto& d : ds)
                CHECK(act(perms[a] * perms[b], d) == act(perms[a], act(perms[b], d)));
}

TEST_CASE("orbit examples")
{
    auto os = orbits(support::geometry(2, 1, 1, 0), OrbitKind::Divisors);
    REQUIRE(os.size() == 3);
    CHECK(os[0].representative == std::vector<BoundaryDivisor>{Dt(0, {1}, 2)});
    CHECK(os[0].size == 2);
    CHECK(os[1].representative == std::vector<BoundaryDivisor>{Dt(0, {1, 2}, 2)});
    CHECK(os[1].size == 1);
    CHECK(os[2].representative == std::vector<BoundaryDivisor>{Delt({1, 2}, 2)});
    CHECK(os[2].size == 1);

    auto fm = orbits(support::geometry(3, 1, 0, 0, SpaceKind::FM), OrbitKind::Divisors);
    REQUIRE(fm.size() == 2);
    CHECK(fm[0].size == 3);
    CHECK(fm[1].size == 1);

    CHECK(orbits(support::geometry(1, 1, 3, 0), OrbitKind::Divisors).size() == 3);
}

TEST_CASE("orbit sizes times stabilizer orders give n!")
{
    for (int n = 2; n <= 4; ++n) {
        auto g = support::geometry(n, 1, 1, 0);
        for (int k = 1; k <= 2; ++k) {
            std::uint64_t total = 0;
            for (const auto& o : orbits(g, OrbitKind::NestedK, k)) {
                NestedSet rep(g, o.representative);
                CHECK(o.size * stabilizer_order(rep) == factorial(n));
                total += o.size;
            }
            auto f = f_vector(g);
            CHECK(total == (static_cast<std::size_t>(k) < f.size() ? f[static_cast<std::size_t>(k)] : 0));
        }
    }
}

TEST_CASE("nestedness is invariant under all permutations, n <= 3")
{
    for (int n = 1; n <= 3; ++n) {
        auto g = support::geometry(n, 1, 2, 0);
        auto ds = all_divisors(g);
        auto perms = all_permutations(n);
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i; j < ds.size(); ++j) {
                std::vector<BoundaryDivisor> pair{ds[i], ds[j]};
                const bool base = is_nested(g, pair);
                for (const auto& p : perms) {
                    std::vector<BoundaryDivisor> moved{act(p, ds[i]), act(p, ds[j])};
                    CHECK(is_nested(g, moved) == base);
                }
            }
    }
}

TEST_CASE("fiber trees commute with relabelling")
{
    auto g = support::geometry(3, 1, 2, 0);
    auto perms = all_permutations(3);
    for (const auto& ns : enumerate_nested_sets(g))
        for (const auto& p : perms) {
            auto moved = act(p, ns);
            CHECK(tree_to_nested(act(p, fiber_tree(ns))) == moved);
            CHECK(tree_to_nested(fiber_tree(moved)) == moved);
        }
}

TEST_CASE("random relabelling preserves nestedness, n = 7")
{
    std::mt19937_64 rng(3);
    auto g = support::geometry(7, 1, 2, 0);
    auto ds = all_divisors(g);
    std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
    std::vector<int> images(7);
    std::iota(images.begin(), images.end(), 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::shuffle(images.begin(), images.end(), rng);
        Permutation p(images);
        std::vector<BoundaryDivisor> sub{ds[pick(rng)], ds[pick(rng)], ds[pick(rng)]};
        std::vector<BoundaryDivisor> moved;
        for (const auto& d : sub)
            moved.push_back(act(p, d));
        CHECK(is_nested(g, moved) == is_nested(g, sub));
    }
}
