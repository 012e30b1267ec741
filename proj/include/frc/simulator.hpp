#pragma once

#include "frc/code.hpp"
#include "frc/mds.hpp"
#include "frc/repair.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frc {

struct NodeState {
    bool alive = true;
    std::map<PacketId, Bytes> packets;
};

enum class EventKind { fail, repair, read };

const char* to_string(EventKind kind);

struct EventRecord {
    EventKind kind = EventKind::fail;
    std::vector<NodeId> nodes;
    std::size_t packets_transferred = 0;
};

/// Outcome of one repair: the downloads actually performed.
struct TransferReport {
    std::vector<NodeRepairPlan> repaired;
    std::size_t total_packets = 0;
    /// Packets read from each helper, summed over the repaired nodes.
    std::map<NodeId, int> helper_reads;
};

/// In-memory storage system: an outer MDS codeword placed on nodes by an FR
/// code. Single owner; the free functions below mutate it in place and
/// leave it unchanged when they throw.
struct SystemState {
    FrCode code;
    int k = 0;
    int m = 0;
    std::shared_ptr<const MdsCodec> codec;
    std::vector<NodeState> nodes;
    std::vector<EventRecord> event_log;
    /// Codeword as first placed. Only integrity checks look at it.
    std::vector<CodedPacket> reference;

    NodeState& node(NodeId i) { return nodes.at(static_cast<std::size_t>(i - 1)); }
    const NodeState& node(NodeId i) const { return nodes.at(static_cast<std::size_t>(i - 1)); }
    FailureSet failed() const;
};

/// Encodes `file` into theta packets and places replicas per the node sets.
/// Throws FileTooLargeError when file.m > rate(code, k).
SystemState init_system(const FrCode& code, const SourceFile& file, int k);

/// Marks nodes failed and erases their storage. Throws
/// ToleranceExceededError when more than rho-1 nodes would be down.
void fail_nodes(SystemState& state, std::span<const NodeId> failed);

/// Rebuilds every failed node from the table entry for the current failure
/// set. No-op with an empty report when nothing has failed.
TransferReport repair(SystemState& state, const RepairTable& table);

struct ReadResult {
    SourceFile file;
    /// Distinct packet indices seen across the contacted nodes.
    std::vector<PacketId> observed;
};

/// Contacts exactly k alive nodes, gathers their packets and decodes.
ReadResult user_read(SystemState& state, std::span<const NodeId> contacted);

/// Nodes whose content differs from their prescription (failed nodes included).
std::vector<std::string> integrity_violations(const SystemState& state);

struct ScenarioEvent {
    EventKind op = EventKind::fail;
    std::vector<NodeId> nodes;

    friend bool operator==(const ScenarioEvent&, const ScenarioEvent&) = default;
};

struct EventOutcome {
    std::size_t index = 0;
    EventKind op = EventKind::fail;
    std::vector<NodeId> nodes;
    std::size_t packets_transferred = 0;
    /// Per repaired node download counts (repair events).
    std::vector<std::size_t> per_node_downloads;
    /// Decoded file equals the source (read events).
    std::optional<bool> read_ok;
    std::size_t distinct_packets = 0;
};

struct ScenarioReport {
    std::vector<EventOutcome> events;
    std::size_t total_transferred = 0;
    int reads = 0;
    int reads_ok = 0;
    bool integrity_ok = true;
    std::vector<std::string> violations;

    bool ok() const noexcept { return integrity_ok && reads_ok == reads; }
};

/// Runs the script in order against a fresh system. Operation errors are
/// rethrown as ScenarioError carrying the event index.
ScenarioReport run_scenario(const FrCode& code, const SourceFile& file, int k, std::span<const ScenarioEvent> script);

/// `cycles` rounds of fail/repair/read. Failure sets are drawn uniformly
/// from all nonempty sets of at most rho-1 nodes; reads contact a uniformly
/// random k-subset.
std::vector<ScenarioEvent> random_script(const FrCode& code, int k, int cycles, std::uint64_t seed);

/// Deterministic pseudo-random file for simulations.
SourceFile random_file(int m, std::size_t packet_len, std::uint64_t seed);

} // namespace frc
