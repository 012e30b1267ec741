#include "frc/simulator.hpp"

#include "frc/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace frc {

const char* to_string(EventKind kind)
{
    switch (kind) {
    case EventKind::fail:
        return "fail";
    case EventKind::repair:
        return "repair";
    case EventKind::read:
        return "read";
    }
    return "?";
}

FailureSet SystemState::failed() const
{
    FailureSet out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!nodes[i].alive)
            out.push_back(static_cast<NodeId>(i + 1));
    return out;
}

SystemState init_system(const FrCode& code, const SourceFile& file, int k)
{
    if (const auto report = validate_fr(code); !report.ok())
        throw InvalidDesignError("FR code does not validate: " + report.violations.front());
    file.check();
    const int guaranteed = rate(code, k).value;
    if (file.m > guaranteed)
        throw FileTooLargeError("file of " + std::to_string(file.m) + " packets exceeds rate " +
                                std::to_string(guaranteed) + " at k=" + std::to_string(k));

    SystemState state;
    state.code = code;
    state.k = k;
    state.m = file.m;
    state.codec = std::make_shared<const MdsCodec>(file.m, code.theta());
    state.reference = state.codec->encode(file);
    state.nodes.resize(static_cast<std::size_t>(code.n()));
    for (NodeId i = 1; i <= code.n(); ++i)
        for (PacketId p : code.node(i))
            state.node(i).packets.emplace(p, state.reference[static_cast<std::size_t>(p - 1)].payload);
    return state;
}

void fail_nodes(SystemState& state, std::span<const NodeId> failed)
{
    std::set<NodeId> down(failed.begin(), failed.end());
    for (NodeId u : down)
        if (u < 1 || u > state.code.n())
            throw ParameterError("node " + std::to_string(u) + " outside 1.." + std::to_string(state.code.n()));
    for (NodeId u : state.failed())
        down.insert(u);
    if (static_cast<int>(down.size()) > state.code.rho() - 1)
        throw ToleranceExceededError(std::to_string(down.size()) + " failed nodes exceed tolerance rho-1=" +
                                     std::to_string(state.code.rho() - 1));

    for (NodeId u : failed) {
        auto& node = state.node(u);
        node.alive = false;
        node.packets.clear();
    }
    state.event_log.push_back({EventKind::fail, {failed.begin(), failed.end()}, 0});
}

TransferReport repair(SystemState& state, const RepairTable& table)
{
    TransferReport report;
    const auto failed = state.failed();
    if (failed.empty())
        return report;

    const auto* plans = table.find(failed);
    if (!plans)
        throw MissingTableEntryError("repair table has no entry for " + std::to_string(failed.size()) +
                                     " failed nodes");

    // Stage rebuilt nodes first so a bad entry leaves the state untouched.
    std::map<NodeId, std::map<PacketId, Bytes>> staged;
    for (const auto& plan : *plans) {
        if (!std::binary_search(failed.begin(), failed.end(), plan.node))
            throw ConsistencyError("table entry repairs v" + std::to_string(plan.node) + ", which has not failed");
        std::set<NodeId> helpers;
        std::map<PacketId, Bytes> rebuilt;
        for (const auto& [helper, packet] : plan.downloads) {
            const Bytes* source = nullptr;
            if (auto it = staged.find(helper); it != staged.end()) {
                if (auto pk = it->second.find(packet); pk != it->second.end())
                    source = &pk->second;
            } else if (helper >= 1 && helper <= state.code.n() && state.node(helper).alive) {
                const auto& held = state.node(helper).packets;
                if (auto pk = held.find(packet); pk != held.end())
                    source = &pk->second;
            }
            if (!source)
                throw ConsistencyError("helper v" + std::to_string(helper) + " cannot serve packet " +
                                       std::to_string(packet) + " to v" + std::to_string(plan.node));
            if (!helpers.insert(helper).second)
                throw ConsistencyError("helper v" + std::to_string(helper) + " assigned twice for v" +
                                       std::to_string(plan.node));
            rebuilt.emplace(packet, *source);
        }
        const auto& prescribed = state.code.node(plan.node);
        if (rebuilt.size() != prescribed.size() ||
            !std::equal(prescribed.begin(), prescribed.end(), rebuilt.begin(),
                        [](PacketId p, const auto& kv) { return p == kv.first; }))
            throw ConsistencyError("table entry for v" + std::to_string(plan.node) +
                                   " does not cover its node set");
        staged.emplace(plan.node, std::move(rebuilt));
        report.repaired.push_back(plan);
        report.total_packets += plan.downloads.size();
        for (const auto& a : plan.downloads)
            ++report.helper_reads[a.helper];
    }
    if (staged.size() != failed.size())
        throw ConsistencyError("table entry does not repair every failed node");

    for (auto& [u, content] : staged) {
        auto& node = state.node(u);
        node.packets = std::move(content);
        node.alive = true;
    }
    state.event_log.push_back({EventKind::repair, failed, report.total_packets});
    return report;
}

ReadResult user_read(SystemState& state, std::span<const NodeId> contacted)
{
    const std::set<NodeId> nodes(contacted.begin(), contacted.end());
    if (static_cast<int>(nodes.size()) != state.k || nodes.size() != contacted.size())
        throw ParameterError("a read contacts exactly k=" + std::to_string(state.k) + " distinct nodes");
    std::map<PacketId, const Bytes*> seen;
    for (NodeId u : nodes) {
        if (u < 1 || u > state.code.n())
            throw ParameterError("node " + std::to_string(u) + " outside 1.." + std::to_string(state.code.n()));
        if (!state.node(u).alive)
            throw FailedNodeContactedError("read contacted failed node v" + std::to_string(u));
        for (const auto& [p, bytes] : state.node(u).packets)
            seen.emplace(p, &bytes);
    }

    std::vector<CodedPacket> packets;
    ReadResult out;
    for (auto [p, bytes] : seen) {
        packets.push_back({p, *bytes});
        out.observed.push_back(p);
    }
    out.file = state.codec->decode(packets);
    state.event_log.push_back({EventKind::read, {nodes.begin(), nodes.end()}, 0});
    return out;
}

std::vector<std::string> integrity_violations(const SystemState& state)
{
    std::vector<std::string> out;
    for (NodeId u = 1; u <= state.code.n(); ++u) {
        const auto& node = state.node(u);
        const std::string name = "v" + std::to_string(u);
        if (!node.alive) {
            out.push_back(name + " is failed");
            continue;
        }
        const auto& prescribed = state.code.node(u);
        if (node.packets.size() != prescribed.size()) {
            out.push_back(name + " stores " + std::to_string(node.packets.size()) + " packets, expected " +
                          std::to_string(prescribed.size()));
            continue;
        }
        for (PacketId p : prescribed) {
            auto it = node.packets.find(p);
            if (it == node.packets.end())
                out.push_back(name + " lacks packet " + std::to_string(p));
            else if (it->second != state.reference[static_cast<std::size_t>(p - 1)].payload)
                out.push_back(name + " holds corrupted packet " + std::to_string(p));
        }
    }
    return out;
}

ScenarioReport run_scenario(const FrCode& code, const SourceFile& file, int k, std::span<const ScenarioEvent> script)
{
    auto state = init_system(code, file, k);

    // Only failure depths the script can reach need table entries.
    int depth = 0;
    {
        std::set<NodeId> down;
        for (const auto& ev : script) {
            if (ev.op == EventKind::fail)
                down.insert(ev.nodes.begin(), ev.nodes.end());
            else if (ev.op == EventKind::repair)
                down.clear();
            depth = std::max(depth, static_cast<int>(down.size()));
        }
    }
    const auto table = build_repair_table(code, std::min(depth, code.rho() - 1));

    ScenarioReport report;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const auto& ev = script[i];
        EventOutcome outcome;
        outcome.index = i;
        outcome.op = ev.op;
        outcome.nodes = ev.nodes;
        try {
            switch (ev.op) {
            case EventKind::fail:
                fail_nodes(state, ev.nodes);
                break;
            case EventKind::repair: {
                outcome.nodes = state.failed();
                const auto transfer = repair(state, table);
                outcome.packets_transferred = transfer.total_packets;
                for (const auto& plan : transfer.repaired)
                    outcome.per_node_downloads.push_back(plan.downloads.size());
                report.total_transferred += transfer.total_packets;
                break;
            }
            case EventKind::read: {
                const auto result = user_read(state, ev.nodes);
                outcome.distinct_packets = result.observed.size();
                outcome.read_ok = result.file == file;
                ++report.reads;
                if (*outcome.read_ok)
                    ++report.reads_ok;
                break;
            }
            }
        } catch (const ScenarioError&) {
            throw;
        } catch (const std::exception& e) {
            throw ScenarioError(i, e.what());
        }
        report.events.push_back(std::move(outcome));
    }
    report.violations = integrity_violations(state);
    report.integrity_ok = report.violations.empty();
    return report;
}

std::vector<ScenarioEvent> random_script(const FrCode& code, int k, int cycles, std::uint64_t seed)
{
    if (k < 1 || k > code.n())
        throw ParameterError("need 1 <= k <= n");
    std::mt19937_64 rng(seed);
    const int n = code.n();
    const int max_fail = std::max(0, code.rho() - 1);

    // Weight each failure size by the number of sets of that size.
    std::vector<double> weights;
    for (int s = 1; s <= max_fail; ++s)
        weights.push_back(static_cast<double>(binomial_saturating(n, s)));

    std::vector<NodeId> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i + 1;

    auto sample = [&](int size) {
        std::vector<NodeId> pick = all;
        std::shuffle(pick.begin(), pick.end(), rng);
        pick.resize(static_cast<std::size_t>(size));
        std::sort(pick.begin(), pick.end());
        return pick;
    };

    std::vector<ScenarioEvent> script;
    for (int c = 0; c < cycles; ++c) {
        if (max_fail > 0) {
            std::discrete_distribution<int> size_dist(weights.begin(), weights.end());
            script.push_back({EventKind::fail, sample(size_dist(rng) + 1)});
            script.push_back({EventKind::repair, {}});
        }
        script.push_back({EventKind::read, sample(k)});
    }
    return script;
}

SourceFile random_file(int m, std::size_t packet_len, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> byte(0, 255);
    SourceFile file{m, packet_len, {}};
    for (int i = 0; i < m; ++i) {
        Bytes p(packet_len);
        for (auto& b : p)
            b = static_cast<std::uint8_t>(byte(rng));
        file.data.push_back(std::move(p));
    }
    return file;
}

} // namespace frc
