#pragma once

#include "frc/code.hpp"
#include "frc/designs.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace frc {

/// Simple d-regular graph on vertices 1..n. Edge e (one-based) is edges[e-1];
/// endpoints are stored as (smaller, larger).
struct RegularGraph {
    int n = 0;
    int d = 0;
    std::vector<std::pair<int, int>> edges;
};

inline constexpr int kDefaultPairingRetries = 10'000;

/// Circulant graph: i ~ i±1, ..., i±floor(d/2) (mod n), plus i + n/2 when d
/// is odd. Edges sorted lexicographically. Throws ParameterError when n*d is
/// odd, d < 1 or d >= n.
RegularGraph circulant_graph(int n, int d);

/// Uniform-ish random d-regular simple graph from the pairing model with
/// rejection of loops and parallel edges. For d > (n-1)/2 the complement
/// is sampled instead. After `max_retries` rejections, falls back to the
/// circulant graph under a random vertex relabelling.
RegularGraph random_regular_graph(int n, int d, std::uint64_t seed, int max_retries = kDefaultPairingRetries);

/// Node i stores the indices of the edges incident to vertex i.
FrCode graph_code(const RegularGraph& g);

/// K_n code: d = n-1, rho = 2, theta = C(n,2). Requires n >= 3.
FrCode complete_graph_code(int n);

/// rho = 2 code from a d-regular graph: circulant when `seed` is empty,
/// pairing model otherwise.
FrCode regular_graph_code(int n, int d, std::optional<std::uint64_t> seed = std::nullopt);

/// Blocks become node sets: n = b, d = alpha, rho = r, theta = v.
/// Throws InvalidDesignError unless the design validates.
FrCode direct_code(const SteinerSystem& sys);

/// Points become nodes, blocks become packets: V_i = { j : i in B_j }.
/// n = v, d = r, rho = alpha, theta = b.
FrCode transpose_code(const SteinerSystem& sys);

/// The 3x3 grid code {123, 456, 789, 147, 258, 369}.
FrCode grid_code();

} // namespace frc
