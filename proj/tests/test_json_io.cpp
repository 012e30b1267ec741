#include "doctest.h"

#include "fixtures.hpp"

#include "frc/constructions.hpp"
#include "frc/error.hpp"
#include "frc/json_io.hpp"

#include <random>

using namespace frc;

TEST_CASE("FR code document layout")
{
    const auto j = code_to_json(fixture::fano());
    CHECK(j.dump() ==
          R"({"d":3,"n":7,"nodes":[[1,2,3],[3,4,5],[1,5,6],[1,4,7],[2,5,7],[3,6,7],[2,4,6]],"rho":3,"theta":7})");
}

TEST_CASE("FR code documents round-trip for constructed and random codes")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 10);
        const int d = 2;
        const auto code = regular_graph_code(n, d, rng());
        CHECK(code_from_json(Json::parse(code_to_json(code).dump())) == code);
    }
    const auto t = transpose_code(steiner_triple_system(13));
    CHECK(code_from_json(code_to_json(t)) == t);
}

TEST_CASE("malformed FR code documents")
{
    CHECK_THROWS_AS(code_from_json(Json::parse(R"({"n":3})")), ParameterError);
    CHECK_THROWS_AS(code_from_json(Json::parse(R"({"n":"x","d":1,"rho":1,"theta":1,"nodes":[]})")), ParameterError);
    CHECK_THROWS_AS(code_from_json(Json::parse("[1,2]")), ParameterError);
}

TEST_CASE("Steiner documents")
{
    const auto j = steiner_to_json(fano_plane());
    CHECK(j["t"] == 2);
    CHECK(j["alpha"] == 3);
    CHECK(steiner_from_json(j) == fano_plane());
    CHECK_THROWS_AS(steiner_from_json(Json::parse(R"({"t":2})")), ParameterError);
}

TEST_CASE("scenario scripts")
{
    const auto j = Json::parse(R"([{"op":"fail","nodes":[1]},{"op":"repair"},{"op":"read","nodes":[2,4,5]}])");
    const auto script = script_from_json(j);
    REQUIRE(script.size() == 3);
    CHECK(script[0] == ScenarioEvent{EventKind::fail, {1}});
    CHECK(script[1] == ScenarioEvent{EventKind::repair, {}});
    CHECK(script[2] == ScenarioEvent{EventKind::read, {2, 4, 5}});
    CHECK(script_to_json(script) == j);
    CHECK_THROWS_AS(script_from_json(Json::parse(R"([{"op":"explode"}])")), ParameterError);
    CHECK_THROWS_AS(script_from_json(Json::parse(R"([{"op":"fail"}])")), ParameterError);
    CHECK_THROWS_AS(script_from_json(Json::parse(R"({"op":"fail"})")), ParameterError);
}

TEST_CASE("capacity report document")
{
    const auto report = capacity_report({4, 2, 2, 2}, SearchBudget{});
    const auto j = capacity_report_to_json(report);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["d"] == 2);
    CHECK(j["rho"] == 2);
    CHECK(j["averaging"] == 3);
    CHECK(j["recursive"] == 3);
    CHECK(j["search"]["exact"] == true);
    CHECK(j["search"]["value"] == 3);
    CHECK(j["search"]["witness"].size() == 4);

    const auto plain = capacity_report_to_json(capacity_report({7, 3, 3, 3}));
    CHECK_FALSE(plain.contains("search"));
}

TEST_CASE("packet sidecar")
{
    const PacketHeader h{3, 6, 7, 64};
    const auto j = packet_header_to_json(h);
    CHECK(j.dump() == R"({"index":3,"m":6,"packet_len":64,"theta":7})");
    const auto back = packet_header_from_json(j);
    CHECK(back.index == 3);
    CHECK(back.packet_len == 64);
}

TEST_CASE("scenario report document")
{
    const std::vector<ScenarioEvent> script{{EventKind::fail, {1}}, {EventKind::repair, {}}, {EventKind::read, {2, 4, 5}}};
    const auto report = run_scenario(fixture::fano(), random_file(6, 4, 1), 3, script);
    const auto j = scenario_report_to_json(report);
    CHECK(j["integrity_ok"] == true);
    CHECK(j["total_transferred"] == 3);
    CHECK(j["events"][1]["transferred"] == 3);
    CHECK(j["events"][2]["read_ok"] == true);
}
