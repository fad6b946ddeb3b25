#include "wonderful/io.hpp"

#include <doctest.h>

using namespace wonderful;
using nlohmann::json;

TEST_CASE("config from JSON")
{
    auto g = config_from_json(json::parse(R"({"n": 2, "dim_X": 1,
        "components": [{"name": "p0", "dim": 0}, {"name": "p1", "dim": 0}], "space": "XD_bracket"})"));
    CHECK(g.n == 2);
    CHECK(g.ambient_dim == 1);
    CHECK(g.component_count() == 2);
    CHECK(g.components[1].name == "p1");
    CHECK(g.space == SpaceKind::XDBracket);
    CHECK(config_from_json(config_to_json(g)).components[0].name == "p0");

    auto fm = config_from_json(json::parse(R"({"n": 3, "dim_X": 2, "space": "FM"})"));
    CHECK(fm.component_count() == 0);
}

TEST_CASE("bad configs are rejected")
{
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": 2, "dim_X": 1, "space": "XD_bracket",
        "components": [{"dim": 1}]})")), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": 2, "space": "FM"})")), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": "two", "dim_X": 1, "space": "FM"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"n": 2, "dim_X": 1, "space": "P1"})")), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json(json::parse("[1, 2]")), std::invalid_argument);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), std::invalid_argument);
}

TEST_CASE("label lists")
{
    CHECK(split_label_list(R"(["D:c1:{1,2}", "Delta:{1,2}"])") ==
          std::vector<std::string>{"D:c1:{1,2}", "Delta:{1,2}"});
    CHECK(split_label_list("[D:c1:{1, 2}, Delta:{1,2}]") == std::vector<std::string>{"D:c1:{1,2}", "Delta:{1,2}"});
    CHECK(split_label_list(" [] ").empty());
    CHECK_THROWS(split_label_list("D:c1:{1}"));
    CHECK_THROWS(split_label_list("[D:c1:{1]"));
    CHECK_THROWS(split_label_list("[D:c1:{1},,Delta:{1,2}]"));
}

TEST_CASE("label extent")
{
    auto e = label_extent({"D:c2:{1,3}", "Delta:{2,4}"});
    CHECK(e.max_point == 4);
    CHECK(e.max_component == 2);
    CHECK(label_extent({}).max_point == 0);
}

TEST_CASE("labels to JSON")
{
    auto ds = parse_divisors({"D:c1:{1}", "Delta:{1,2}"}, 2);
    CHECK(labels_json(ds).dump() == R"(["D:c1:{1}","Delta:{1,2}"])");
    auto cs = parse_centers({"Delta:{{1,2},{3,4}}"}, 4);
    CHECK(labels_json(cs).dump() == R"(["Delta:{{1,2},{3,4}}"])");
}
