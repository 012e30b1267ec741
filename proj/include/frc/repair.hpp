#pragma once

#include "frc/code.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace frc {

/// One uncoded transfer: `helper` reads `packet` and forwards it as is.
struct RepairAssignment {
    NodeId helper = 0;
    PacketId packet = 0;

    friend bool operator==(const RepairAssignment&, const RepairAssignment&) = default;
};

/// How one replacement node is rebuilt: d downloads, one per packet of its
/// node set (ascending packet order), from d distinct helpers.
struct NodeRepairPlan {
    NodeId node = 0;
    std::vector<RepairAssignment> downloads;

    friend bool operator==(const NodeRepairPlan&, const NodeRepairPlan&) = default;
};

/// Sorted set of failed nodes.
using FailureSet = std::vector<NodeId>;

struct RepairTable {
    int max_failures = 0;
    /// Plans per failure set, in ascending order of failed node.
    std::map<FailureSet, std::vector<NodeRepairPlan>> entries;

    const std::vector<NodeRepairPlan>* find(const FailureSet& failed) const;
};

/// Perfect matching of node's packets onto distinct candidate helpers that
/// store them, or nullopt if none exists. Augmenting-path matching with
/// candidates tried in ascending order, so the result is deterministic.
std::optional<std::vector<RepairAssignment>> match_helpers(const FrCode& code, NodeId node,
                                                           std::span<const NodeId> candidates);

/// Precomputes plans for every failure set of size 1..max_failures
/// (default and upper limit rho-1). Failed nodes are repaired in ascending
/// order and a node repaired earlier in the same event may serve later ones.
/// Throws RepairInfeasibleError naming the failure set and node when some
/// node has no perfect matching.
RepairTable build_repair_table(const FrCode& code, std::optional<int> max_failures = std::nullopt);

/// Calls f(set) for every subset of {1..n} of size `size`, in lexicographic order.
template <typename F>
void for_each_subset(int n, int size, F&& f)
{
    if (size < 0 || size > n)
        return;
    std::vector<NodeId> s(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        s[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(static_cast<const std::vector<NodeId>&>(s));
        int i = size - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - size + i + 1)
            --i;
        if (i < 0)
            return;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace frc
