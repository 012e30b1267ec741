#include "doctest.h"

#include "fixtures.hpp"

#include "frc/constructions.hpp"
#include "frc/error.hpp"
#include "frc/simulator.hpp"

using namespace frc;

TEST_CASE("init_system places replicas")
{
    const auto code = fixture::fano();
    const auto file = random_file(6, 16, 1);
    const auto state = init_system(code, file, 3);
    std::size_t stored = 0;
    std::map<PacketId, int> replicas;
    for (NodeId u = 1; u <= 7; ++u) {
        stored += state.node(u).packets.size();
        for (const auto& [p, bytes] : state.node(u).packets) {
            ++replicas[p];
            CHECK(bytes == state.reference[static_cast<std::size_t>(p - 1)].payload);
        }
    }
    CHECK(stored == 21);
    CHECK(replicas.size() == 7);
    for (auto [p, c] : replicas)
        CHECK(c == 3);
    CHECK(integrity_violations(state).empty());
}

TEST_CASE("init_system on the K5 code")
{
    const auto code = complete_graph_code(5);
    const auto file = random_file(9, 8, 2);
    const auto state = init_system(code, file, 3);
    CHECK(state.reference[9].payload.size() == 8);
    CHECK(state.node(1).packets.size() == 4);
    CHECK_THROWS_AS(init_system(code, random_file(10, 8, 2), 3), FileTooLargeError);
    CHECK_THROWS_AS(init_system(fixture::fano(), random_file(7, 8, 2), 3), FileTooLargeError);
}

TEST_CASE("fail_nodes enforces the tolerance")
{
    const auto file = random_file(6, 4, 1);
    auto state = init_system(fixture::fano(), file, 3);
    const std::vector<NodeId> one{1};
    const std::vector<NodeId> two{2};
    fail_nodes(state, one);
    fail_nodes(state, two);
    CHECK(state.failed() == FailureSet{1, 2});
    const std::vector<NodeId> three{3};
    CHECK_THROWS_AS(fail_nodes(state, three), ToleranceExceededError);
    CHECK(state.failed() == FailureSet{1, 2});
    CHECK(state.node(3).alive);

    auto fresh = init_system(fixture::fano(), file, 3);
    const std::vector<NodeId> triple{1, 2, 3};
    CHECK_THROWS_AS(fail_nodes(fresh, triple), ToleranceExceededError);
    CHECK(fresh.failed().empty());

    auto grid = init_system(grid_code(), random_file(7, 4, 1), 3);
    const std::vector<NodeId> pair{1, 2};
    CHECK_THROWS_AS(fail_nodes(grid, pair), ToleranceExceededError);
    const std::vector<NodeId> out_of_range{9};
    CHECK_THROWS_AS(fail_nodes(grid, out_of_range), ParameterError);
}

TEST_CASE("repair restores exact content")
{
    SUBCASE("K5, node v1")
    {
        const auto code = complete_graph_code(5);
        auto state = init_system(code, random_file(9, 32, 3), 3);
        const auto before = state.node(1).packets;
        const auto table = build_repair_table(code);
        const std::vector<NodeId> f{1};
        fail_nodes(state, f);
        const auto report = repair(state, table);
        CHECK(report.total_packets == 4);
        REQUIRE(report.repaired.size() == 1);
        CHECK(report.repaired[0].downloads == std::vector<RepairAssignment>{{2, 1}, {3, 2}, {4, 3}, {5, 4}});
        CHECK(state.node(1).packets == before);
        CHECK(integrity_violations(state).empty());
    }
    SUBCASE("Fano, double failure")
    {
        const auto code = fixture::fano();
        auto state = init_system(code, random_file(6, 32, 4), 3);
        const auto table = build_repair_table(code);
        const std::vector<NodeId> f{1, 2};
        fail_nodes(state, f);
        CHECK_FALSE(integrity_violations(state).empty());
        const auto report = repair(state, table);
        CHECK(report.total_packets == 6);
        for (const auto& plan : report.repaired)
            CHECK(plan.downloads.size() == 3);
        CHECK(integrity_violations(state).empty());
    }
    SUBCASE("nothing failed")
    {
        const auto code = fixture::fano();
        auto state = init_system(code, random_file(6, 4, 4), 3);
        const auto report = repair(state, build_repair_table(code));
        CHECK(report.total_packets == 0);
        CHECK(report.repaired.empty());
        CHECK(state.event_log.empty());
    }
}

TEST_CASE("repair error paths")
{
    const auto code = fixture::fano();
    auto state = init_system(code, random_file(6, 4, 4), 3);
    const std::vector<NodeId> f{1, 2};
    fail_nodes(state, f);
    const auto single_only = build_repair_table(code, 1);
    CHECK_THROWS_AS(repair(state, single_only), MissingTableEntryError);

    auto table = build_repair_table(code);
    table.entries[{1, 2}][0].downloads[0] = {2, 1}; // v2 is down
    CHECK_THROWS_AS(repair(state, table), ConsistencyError);
    CHECK(state.failed() == FailureSet{1, 2});

    auto wrong_packet = build_repair_table(code);
    wrong_packet.entries[{1, 2}][0].downloads[0] = {7, 1}; // v7 lacks packet 1
    CHECK_THROWS_AS(repair(state, wrong_packet), ConsistencyError);
}

TEST_CASE("user reads")
{
    const auto code = fixture::fano();
    const auto file = random_file(6, 24, 8);
    auto state = init_system(code, file, 3);

    const std::vector<NodeId> worst{2, 4, 5};
    const auto r1 = user_read(state, worst);
    CHECK(r1.file == file);
    CHECK(r1.observed == std::vector<PacketId>{1, 2, 3, 4, 5, 7});

    const std::vector<NodeId> full{1, 3, 4};
    const auto r2 = user_read(state, full);
    CHECK(r2.file == file);
    CHECK(r2.observed.size() == 7);

    const std::vector<NodeId> wrong_size{1, 2};
    CHECK_THROWS_AS(user_read(state, wrong_size), ParameterError);

    const std::vector<NodeId> f{1};
    fail_nodes(state, f);
    CHECK_THROWS_AS(user_read(state, full), FailedNodeContactedError);

    // k = n contacts everybody.
    auto everyone = init_system(code, file, 7);
    const std::vector<NodeId> all{1, 2, 3, 4, 5, 6, 7};
    CHECK(user_read(everyone, all).file == file);
}

TEST_CASE("reads succeed for every k-subset")
{
    const auto code = transpose_code(steiner_triple_system(9));
    const int k = 3;
    const int m = rate(code, k).value;
    const auto file = random_file(m, 8, 1);
    auto state = init_system(code, file, k);
    int reads = 0;
    for_each_subset(code.n(), k, [&](const std::vector<NodeId>& s) {
        CHECK(user_read(state, s).file == file);
        ++reads;
    });
    CHECK(reads == 84);
}

TEST_CASE("run_scenario")
{
    const auto code = fixture::fano();
    const auto file = random_file(6, 16, 5);

    SUBCASE("fail, repair, read")
    {
        const std::vector<ScenarioEvent> script{
            {EventKind::fail, {1}}, {EventKind::repair, {}}, {EventKind::read, {2, 4, 5}}};
        const auto report = run_scenario(code, file, 3, script);
        CHECK(report.ok());
        CHECK(report.total_transferred == 3);
        CHECK(report.reads_ok == 1);
        REQUIRE(report.events.size() == 3);
        CHECK(report.events[2].read_ok == true);
        CHECK(report.events[2].distinct_packets == 6);
    }
    SUBCASE("empty script")
    {
        const auto report = run_scenario(code, file, 3, {});
        CHECK(report.events.empty());
        CHECK(report.integrity_ok);
    }
    SUBCASE("errors carry the event index")
    {
        const std::vector<ScenarioEvent> script{{EventKind::fail, {1, 2}}, {EventKind::fail, {3}}};
        try {
            run_scenario(code, file, 3, script);
            FAIL("expected ScenarioError");
        } catch (const ScenarioError& e) {
            CHECK(e.event_index() == 1);
        }
    }
    SUBCASE("unrepaired failure fails the integrity check")
    {
        const std::vector<ScenarioEvent> script{{EventKind::fail, {4}}};
        const auto report = run_scenario(code, file, 3, script);
        CHECK_FALSE(report.integrity_ok);
    }
}

TEST_CASE("seeded random scenarios on a circulant code")
{
    const auto code = regular_graph_code(10, 4);
    const int k = 4;
    const auto file = random_file(rate(code, k).value, 8, 6);
    const auto script = random_script(code, k, 100, 17);
    CHECK(script == random_script(code, k, 100, 17));
    CHECK(script.size() == 300);
    const auto report = run_scenario(code, file, k, script);
    CHECK(report.ok());
    CHECK(report.reads == 100);
    for (const auto& ev : report.events)
        if (ev.op == EventKind::repair) {
            CHECK(ev.packets_transferred == 4);
        }
}

TEST_CASE("random scripts on rho=3 codes draw double failures too")
{
    const auto code = transpose_code(steiner_triple_system(9));
    const auto script = random_script(code, 3, 200, 1);
    bool saw_double = false;
    for (const auto& ev : script)
        if (ev.op == EventKind::fail) {
            CHECK(ev.nodes.size() <= 2);
            saw_double = saw_double || ev.nodes.size() == 2;
        }
    CHECK(saw_double);
    const auto report = run_scenario(code, random_file(rate(code, 3).value, 4, 1), 3, script);
    CHECK(report.ok());
}
