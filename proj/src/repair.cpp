#include "frc/repair.hpp"

#include "frc/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace frc {

const std::vector<NodeRepairPlan>* RepairTable::find(const FailureSet& failed) const
{
    auto it = entries.find(failed);
    return it == entries.end() ? nullptr : &it->second;
}

std::optional<std::vector<RepairAssignment>> match_helpers(const FrCode& code, NodeId node,
                                                           std::span<const NodeId> candidates)
{
    std::vector<NodeId> helpers(candidates.begin(), candidates.end());
    std::sort(helpers.begin(), helpers.end());
    helpers.erase(std::unique(helpers.begin(), helpers.end()), helpers.end());
    std::erase(helpers, node);

    const auto& lost = code.node(node);
    // holders[i] = positions in `helpers` storing lost[i]
    std::vector<std::vector<std::size_t>> holders(lost.size());
    for (std::size_t i = 0; i < lost.size(); ++i)
        for (std::size_t h = 0; h < helpers.size(); ++h)
            if (code.stores(helpers[h], lost[i]))
                holders[i].push_back(h);

    constexpr auto kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(helpers.size(), kFree); // helper -> packet position
    std::vector<char> seen;

    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (std::size_t h : holders[i]) {
            if (seen[h])
                continue;
            seen[h] = 1;
            if (owner[h] == kFree || augment(owner[h])) {
                owner[h] = i;
                return true;
            }
        }
        return false;
    };

    for (std::size_t i = 0; i < lost.size(); ++i) {
        seen.assign(helpers.size(), 0);
        if (!augment(i))
            return std::nullopt;
    }

    std::vector<RepairAssignment> out(lost.size());
    for (std::size_t h = 0; h < helpers.size(); ++h)
        if (owner[h] != kFree)
            out[owner[h]] = {helpers[h], lost[owner[h]]};
    return out;
}

namespace {

std::string describe(const FailureSet& failed)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < failed.size(); ++i)
        os << (i ? "," : "") << 'v' << failed[i];
    os << '}';
    return os.str();
}

} // namespace

RepairTable build_repair_table(const FrCode& code, std::optional<int> max_failures)
{
    if (const auto report = validate_fr(code); !report.ok())
        throw InvalidDesignError("FR code does not validate: " + report.violations.front());
    const int limit = code.rho() - 1;
    const int depth = max_failures.value_or(limit);
    if (depth < 0 || depth > limit)
        throw ParameterError("max_failures=" + std::to_string(depth) + " outside 0..rho-1=" + std::to_string(limit));

    RepairTable table;
    table.max_failures = depth;
    std::vector<NodeId> candidates;
    for (int size = 1; size <= depth; ++size) {
        for_each_subset(code.n(), size, [&](const FailureSet& failed) {
            std::vector<NodeRepairPlan> plans;
            for (NodeId node : failed) {
                candidates.clear();
                for (NodeId u = 1; u <= code.n(); ++u) {
                    const bool down = std::binary_search(failed.begin(), failed.end(), u);
                    if (!down || u < node)
                        candidates.push_back(u);
                }
                auto match = match_helpers(code, node, candidates);
                if (!match)
                    throw RepairInfeasibleError("no uncoded repair for node v" + std::to_string(node) +
                                                " under failure set " + describe(failed));
                plans.push_back({node, std::move(*match)});
            }
            table.entries.emplace(failed, std::move(plans));
        });
    }
    return table;
}

} // namespace frc
