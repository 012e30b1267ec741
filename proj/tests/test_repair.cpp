#include "doctest.h"

#include "fixtures.hpp"

#include "frc/constructions.hpp"
#include "frc/error.hpp"
#include "frc/repair.hpp"

#include <set>

using namespace frc;

namespace {

// Checks every entry against the table invariants.
void check_table(const FrCode& code, const RepairTable& table)
{
    for (const auto& [failed, plans] : table.entries) {
        REQUIRE(plans.size() == failed.size());
        std::set<NodeId> repaired;
        for (std::size_t i = 0; i < plans.size(); ++i) {
            const auto& plan = plans[i];
            CHECK(plan.node == failed[i]);
            REQUIRE(static_cast<int>(plan.downloads.size()) == code.d());
            std::set<NodeId> helpers;
            NodeSet got;
            for (auto [helper, packet] : plan.downloads) {
                helpers.insert(helper);
                got.push_back(packet);
                const bool available =
                    !std::binary_search(failed.begin(), failed.end(), helper) || repaired.count(helper);
                CHECK(available);
                CHECK(code.stores(helper, packet));
            }
            CHECK(static_cast<int>(helpers.size()) == code.d());
            CHECK(got == code.node(plan.node));
            repaired.insert(plan.node);
        }
    }
}

} // namespace

TEST_CASE("Fano repair of v1")
{
    const auto code = fixture::fano();

    const std::vector<NodeId> good{4, 5, 6};
    const auto m = match_helpers(code, 1, good);
    REQUIRE(m);
    CHECK(*m == std::vector<RepairAssignment>{{4, 1}, {5, 2}, {6, 3}});

    const std::vector<NodeId> bad{2, 3, 4};
    CHECK_FALSE(match_helpers(code, 1, bad));

    const auto table = build_repair_table(code);
    CHECK(table.max_failures == 2);
    CHECK(table.entries.size() == 7 + 21);
    const auto* entry = table.find({1});
    REQUIRE(entry);
    REQUIRE(entry->size() == 1);
    const auto& plan = entry->front();
    CHECK(plan.node == 1);
    check_table(code, table);
}

TEST_CASE("Fano double failure uses the unique surviving holder of packet 3")
{
    const auto table = build_repair_table(fixture::fano());
    const auto* entry = table.find({1, 2});
    REQUIRE(entry);
    REQUIRE(entry->size() == 2);
    const auto& first = (*entry)[0];
    CHECK(first.node == 1);
    CHECK(std::find(first.downloads.begin(), first.downloads.end(), RepairAssignment{6, 3}) != first.downloads.end());
}

TEST_CASE("K5 repair contacts every survivor for one packet each")
{
    const auto code = complete_graph_code(5);
    const auto table = build_repair_table(code);
    const auto* entry = table.find({1});
    REQUIRE(entry);
    CHECK((*entry)[0].downloads == std::vector<RepairAssignment>{{2, 1}, {3, 2}, {4, 3}, {5, 4}});
    CHECK(table.entries.size() == 5);
}

TEST_CASE("repair tables exist for every constructed code")
{
    std::vector<FrCode> codes{fixture::fano(), grid_code(), complete_graph_code(6),
                              regular_graph_code(8, 3), regular_graph_code(9, 4, 3),
                              direct_code(steiner_triple_system(9)), transpose_code(steiner_triple_system(9)),
                              transpose_code(steiner_triple_system(13))};
    for (const auto& code : codes) {
        const auto table = build_repair_table(code);
        std::size_t expected = 0;
        for (int s = 1; s <= code.rho() - 1; ++s)
            expected += binomial_saturating(code.n(), s);
        CHECK(table.entries.size() == expected);
        check_table(code, table);
    }
}

TEST_CASE("repair infeasibility is reported")
{
    // Identical node pairs: v1 can only get packets 1 and 2 from v2.
    CHECK_THROWS_WITH_AS(build_repair_table(fixture::doubled_pairs()),
                         "no uncoded repair for node v1 under failure set {v1}", RepairInfeasibleError);
}

TEST_CASE("repair table argument checks")
{
    CHECK_THROWS_AS(build_repair_table(fixture::fano(), 3), ParameterError);
    CHECK(build_repair_table(fixture::fano(), 1).entries.size() == 7);
    auto nodes = fixture::fano().nodes();
    nodes[6] = {2, 4, 7};
    CHECK_THROWS_AS(build_repair_table(FrCode({7, 3, 3, 7}, nodes)), InvalidDesignError);
}

TEST_CASE("for_each_subset enumerates in lexicographic order")
{
    std::vector<std::vector<NodeId>> seen;
    for_each_subset(4, 2, [&](const std::vector<NodeId>& s) { seen.push_back(s); });
    CHECK(seen == std::vector<std::vector<NodeId>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    int count = 0;
    for_each_subset(5, 0, [&](const std::vector<NodeId>&) { ++count; });
    CHECK(count == 1);
    for_each_subset(3, 4, [&](const std::vector<NodeId>&) { ++count; });
    CHECK(count == 1);
}
