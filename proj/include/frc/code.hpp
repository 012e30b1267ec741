#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frc {

/// Index of a coded packet. One-based, in 1..theta.
using PacketId = int;
/// Index of a storage node. One-based, in 1..n.
using NodeId = int;

using NodeSet = std::vector<PacketId>;

/// Shape of an FR code: n nodes storing d packets each, theta distinct
/// packets, each replicated rho times. The user contact degree k is not a
/// property of the code and is passed separately where it matters.
struct CodeParams {
    int n = 0;
    int d = 0;
    int rho = 0;
    int theta = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// The full (n, k, d) system triplet together with the repetition degree.
struct DssParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int rho = 0;

    /// theta = n*d/rho. Throws ParameterError unless rho divides n*d.
    int theta() const;
    /// Throws ParameterError unless 1 <= k <= d < n, rho >= 1 and rho | n*d.
    void check() const;

    friend bool operator==(const DssParams&, const DssParams&) = default;
};

/// Inner repetition code: node i stores the packets in nodes[i-1].
///
/// Node sets are kept sorted ascending. Node order is significant (node
/// identity matters for repair), so equality compares sets position by
/// position. The constructor does not validate; use validate_fr.
class FrCode {
public:
    FrCode() = default;
    FrCode(CodeParams params, std::vector<NodeSet> nodes);

    const CodeParams& params() const noexcept { return params_; }
    int n() const noexcept { return params_.n; }
    int d() const noexcept { return params_.d; }
    int rho() const noexcept { return params_.rho; }
    int theta() const noexcept { return params_.theta; }

    const std::vector<NodeSet>& nodes() const noexcept { return nodes_; }
    /// One-based node access.
    const NodeSet& node(NodeId i) const { return nodes_.at(static_cast<std::size_t>(i - 1)); }
    bool stores(NodeId i, PacketId p) const;

    friend bool operator==(const FrCode&, const FrCode&) = default;

private:
    CodeParams params_;
    std::vector<NodeSet> nodes_;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks set sizes, packet ranges, replication counts and theta*rho = n*d.
/// Never throws on a malformed candidate; problems are listed as violations.
ValidationReport validate_fr(const FrCode& code);

/// Capacity k*d - k(k-1)/2 of an (n, k, d) system in the minimum-bandwidth
/// regime. Requires 1 <= k <= d < n.
std::int64_t c_mbr(int n, int k, int d);

struct Rate {
    int k = 0;
    int value = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Saturating binomial coefficient; returns UINT64_MAX on overflow.
std::uint64_t binomial_saturating(int n, int k);

/// Minimum over all k-node subsets of the number of distinct packets seen.
/// Exhaustive; throws EnumerationCapError when C(n,k) exceeds `cap`.
Rate rate(const FrCode& code, int k, std::uint64_t cap = kDefaultEnumerationCap);

struct GoodnessReport {
    bool good = true;
    /// margins[k-1] = rate(code, k) - c_mbr(n, k, d), for k = 1..d.
    std::vector<std::int64_t> margins;
};

/// rate(code, k) >= c_mbr(n, k, d) for every k in 1..d.
GoodnessReport is_universally_good(const FrCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Largest |V_i ∩ V_j| over distinct node pairs (0 when n < 2).
int max_pairwise_intersection(const FrCode& code);

/// Sorted multiset of |V_i ∩ V_j| over all unordered node pairs.
std::vector<int> pairwise_intersection_profile(const FrCode& code);

} // namespace frc
