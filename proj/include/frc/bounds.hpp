#pragma once

#include "frc/code.hpp"

#include <cstdint>
#include <optional>

namespace frc {

/// floor((n*d/rho) * (1 - C(n-rho,k)/C(n,k))), evaluated exactly.
/// C(n-rho,k) is taken as 0 when k > n-rho. Requires rho | n*d and
/// 1 <= k <= n.
std::int64_t averaging_bound(int n, int k, int d, int rho);

/// g(k) with g(1) = d and g(j+1) = g(j) + d - ceil((rho*g(j) - j*d)/(n-j)).
/// Requires rho | n*d and 1 <= k < n.
std::int64_t recursive_bound(int n, int k, int d, int rho);

struct SearchBudget {
    double seconds = 60.0;
    /// Guard on n*theta; larger instances are rejected up front.
    int max_cells = 64;
};

struct SearchResult {
    /// False when the budget ran out; `value` is then only a lower bound.
    bool exact = false;
    int value = 0;
    std::optional<FrCode> witness;
    std::uint64_t nodes_visited = 0;
};

/// Maximum of rate(C, k) over every FR code with the given (n, d, rho),
/// by backtracking over set systems in canonical form (node sets
/// lexicographically nondecreasing, packet labels introduced in order of
/// first use). Ties are broken towards the lexicographically smallest
/// canonical code, so results do not depend on timing unless the budget
/// expires.
SearchResult fr_capacity_search(int n, int d, int rho, int k, SearchBudget budget = {});

struct BestKnown {
    int value = 0;
    FrCode code;
};

/// Best rate at k among this library's constructions that match (n, d, rho),
/// if any applies and its rate is enumerable.
std::optional<BestKnown> best_known_construction(int n, int d, int rho, int k);

struct CapacityReport {
    DssParams params;
    std::int64_t averaging = 0;
    std::int64_t recursive = 0;
    std::optional<BestKnown> best_known;
    std::optional<SearchResult> search;

    std::optional<int> exact_capacity() const
    {
        if (search && search->exact)
            return search->value;
        return std::nullopt;
    }
};

/// Bounds and best-known construction; runs the search when `budget` is set.
CapacityReport capacity_report(const DssParams& params, std::optional<SearchBudget> budget = std::nullopt);

} // namespace frc
