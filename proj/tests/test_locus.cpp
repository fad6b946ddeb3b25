#include "wonderful/locus.hpp"

#include "finite_model.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace wonderful;

namespace {

Center D(int c, std::initializer_list<int> s, int n) { return Center::d_locus(c, IndexSubset::of(n, s)); }
Center Delta(std::initializer_list<int> s, int n) { return Center::diagonal(IndexSubset::of(n, s)); }

} // namespace

TEST_CASE("center to locus")
{
    auto g = support::geometry(3, 2, 1, 1);
    auto l = center_to_locus(D(0, {1, 2}, 3), g);
    CHECK(l.partition().is_discrete());
    CHECK(l.pin_of(1) == 0);
    CHECK(l.pin_of(2) == 0);
    CHECK(l.pin_of(3) == -1);

    auto m = center_to_locus(Delta({1, 2}, 3), g);
    CHECK(m.partition().to_string() == "{{1,2}}");
    CHECK(m.pin_of(1) == -1);

    auto g4 = support::geometry(4, 1, 0, 0, SpaceKind::FM);
    auto poly = Center::diagonal(parse_partition("{{1,2},{3,4}}", 4));
    CHECK(center_to_locus(poly, g4).partition().to_string() == "{{1,2},{3,4}}");
    CHECK(poly.label() == "Delta:{{1,2},{3,4}}");
}

TEST_CASE("intersections")
{
    auto g = support::geometry(3, 2, 2, 1);
    auto a = intersect(Delta({1, 2}, 3), Delta({2, 3}, 3), g);
    CHECK(a.partition().to_string() == "{{1,2,3}}");
    CHECK(a.pin_of(1) == -1);

    CHECK(intersect(D(0, {1}, 3), D(1, {1}, 3), g).is_empty());

    auto b = intersect(D(0, {1}, 3), Delta({1, 2}, 3), g);
    CHECK(b.partition().to_string() == "{{1,2}}");
    CHECK(b.pin_of(2) == 0);
}

TEST_CASE("dimension")
{
    auto g = support::geometry(2, 2, 1, 1);
    CHECK(dimension(center_to_locus(Delta({1, 2}, 2), g), g) == 2);
    CHECK(codimension(center_to_locus(Delta({1, 2}, 2), g), g) == 2);
    CHECK(dimension(center_to_locus(D(0, {1, 2}, 2), g), g) == 2);
    CHECK(dimension(intersect(D(0, {1}, 2), Delta({1, 2}, 2), g), g) == 1);
    CHECK_FALSE(dimension(Locus::empty(2), g).has_value());
}

TEST_CASE("containment")
{
    auto g = support::geometry(3, 1, 1, 0);
    CHECK(contains(D(0, {1}, 3), D(0, {1, 2}, 3), g));
    CHECK_FALSE(contains(D(0, {1, 2}, 3), D(0, {1}, 3), g));
    CHECK(contains(Delta({1, 2}, 3), Delta({1, 2, 3}, 3), g));
    // Two points on a single point coincide.
    CHECK(contains(Delta({1, 2}, 3), D(0, {1, 2}, 3), g));
    auto g1 = support::geometry(3, 2, 1, 1);
    CHECK_FALSE(contains(Delta({1, 2}, 3), D(0, {1, 2}, 3), g1));
}

TEST_CASE("pair position examples")
{
    auto g = support::geometry(4, 2, 1, 1);
    CHECK(pair_position(Delta({1, 2}, 4), Delta({3, 4}, 4), g) == PairPosition::Transversal);
    CHECK(pair_position(Delta({1, 2}, 4), Delta({2, 3}, 4), g) == PairPosition::Transversal);
    CHECK(pair_position(D(0, {1, 2}, 4), Delta({1, 2}, 4), g) == PairPosition::CleanOverlap);
    CHECK(pair_position(Delta({1, 2}, 4), Delta({1, 2, 3}, 4), g) == PairPosition::CleanContainment);
    CHECK(to_string(PairPosition::CleanOverlap) == "clean-overlap");
}

TEST_CASE("config validation")
{
    CHECK_THROWS(support::geometry(2, 1, 1, 1));
    CHECK_THROWS(support::geometry(2, 0, 0, 0));
    CHECK_NOTHROW(support::geometry(0, 1, 0, 0));
    CHECK(parse_space_kind("XD_upper") == SpaceKind::XDUpper);
    CHECK_THROWS(parse_space_kind("XD"));
}

TEST_CASE("label round trip")
{
    auto g = support::geometry(4, 1, 2, 0);
    for (const auto& c : support::all_centers(g))
        CHECK(parse_center(c.label(), 4) == c);
    CHECK(D(1, {1, 2}, 4).label() == "D:c2:{1,2}");
    CHECK_THROWS(parse_center("D:c0:{1}", 4));
    CHECK_THROWS(parse_center("Delta:{1}", 4));
}

TEST_CASE("locus calculus agrees with the finite model, n <= 3")
{
    const std::pair<int, int> dims[] = {{1, 0}, {2, 0}, {2, 1}, {3, 1}};
    for (auto [d, dc] : dims)
        for (int n = 1; n <= 3; ++n) {
            auto g = support::geometry(n, d, 2, dc);
            finite_model::Model model(g);
            auto centers = support::all_centers(g);
            for (const auto& a : centers) {
                auto pa = model.points(a);
                CHECK(dimension(center_to_locus(a, g), g) == finite_model::Model::dim_of(pa));
                for (const auto& b : centers) {
                    auto pb = model.points(b);
                    auto both = finite_model::Model::meet(pa, pb);
                    INFO(a.label(), " / ", b.label(), " d=", d, " dc=", dc);
                    CHECK(dimension(intersect(a, b, g), g) == finite_model::Model::dim_of(both));
                    CHECK(contains(a, b, g) == finite_model::Model::subset(pb, pa));
                    CHECK(pair_position(a, b, g) == model.position(a, b));
                }
            }
        }
}

TEST_CASE("closed forms agree with the dimension count")
{
    for (int n = 1; n <= 4; ++n)
        for (auto [d, dc] : {std::pair{1, 0}, {2, 1}}) {
            auto g = support::geometry(n, d, 2, dc);
            auto centers = support::all_centers(g);
            for (const auto& a : centers)
                for (const auto& b : centers) {
                    if (a == b)
                        continue;
                    auto cf = closed_form_position(a, b, g);
                    if (!a.is_simple_diagonal() && a.is_diagonal()) {
                        CHECK_FALSE(cf.has_value());
                        continue;
                    }
                    if (cf)
                        CHECK(*cf == pair_position(a, b, g));
                }
        }
}

TEST_CASE("pair position is symmetric")
{
    auto g = support::geometry(4, 2, 2, 0);
    auto centers = support::all_centers(g);
    for (const auto& a : centers)
        for (const auto& b : centers)
            CHECK(pair_position(a, b, g) == pair_position(b, a, g));
}

TEST_CASE("separation pattern")
{
    auto g = support::geometry(2, 1, 1, 0).with_points(2);
    // Δ_{12} ∩ D_{c,{2}} = D_{c,{1,2}} sits inside D_{c,{1,2}}, which lies strictly inside Δ_{12}.
    CHECK(separates(Delta({1, 2}, 2), D(0, {2}, 2), D(0, {1, 2}, 2), g));
    CHECK_FALSE(separates(Delta({1, 2}, 2), D(0, {2}, 2), Delta({1, 2}, 2), g));
}
