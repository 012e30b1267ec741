#pragma once

#include "frc/code.hpp"

#include <string>
#include <vector>

namespace frc {

using Block = std::vector<int>;

/// Block design S(2, alpha, v) on points 1..v.
struct SteinerSystem {
    int t = 2;
    int alpha = 0;
    int v = 0;
    std::vector<Block> blocks;

    int b() const noexcept { return static_cast<int>(blocks.size()); }
    /// Replication number (v-1)/(alpha-1); only meaningful when feasible.
    int r() const noexcept { return alpha > 1 ? (v - 1) / (alpha - 1) : 0; }

    friend bool operator==(const SteinerSystem&, const SteinerSystem&) = default;
};

/// Result of the integrality test for S(2, alpha, v).
struct SteinerParams {
    bool feasible = false;
    int b = 0;
    int r = 0;
    /// Names the failed congruence when infeasible.
    std::string reason;
};

/// r = (v-1)/(alpha-1) and b = v*r/alpha when both are integers.
/// Requires alpha >= 2 and v >= alpha, otherwise reports infeasible.
SteinerParams steiner_params(int alpha, int v);

/// Steiner triple system S(2,3,v) for v = 1 or 3 (mod 6), v >= 7.
/// Bose construction for v = 3 (mod 6), Skolem for v = 1 (mod 6).
/// Throws ParameterError for any other v.
SteinerSystem steiner_triple_system(int v);

/// The seven lines 123, 345, 156, 147, 257, 367, 246.
SteinerSystem fano_plane();

/// Every 2-subset of points lies in exactly one block and the counting
/// relations b*alpha = v*r, v-1 = r*(alpha-1) hold.
ValidationReport validate_steiner(const SteinerSystem& sys);

} // namespace frc
