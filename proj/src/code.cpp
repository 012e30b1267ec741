#include "frc/code.hpp"

#include "frc/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace frc {

int DssParams::theta() const
{
    if (rho < 1 || n < 1 || d < 0 || (static_cast<std::int64_t>(n) * d) % rho != 0)
        throw ParameterError("rho must divide n*d (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                             ", rho=" + std::to_string(rho) + ")");
    return static_cast<int>(static_cast<std::int64_t>(n) * d / rho);
}

void DssParams::check() const
{
    if (!(1 <= k && k <= d && d < n))
        throw ParameterError("need 1 <= k <= d < n (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             ", d=" + std::to_string(d) + ")");
    (void)theta();
}

FrCode::FrCode(CodeParams params, std::vector<NodeSet> nodes)
    : params_(params), nodes_(std::move(nodes))
{
    for (auto& s : nodes_)
        std::sort(s.begin(), s.end());
}

bool FrCode::stores(NodeId i, PacketId p) const
{
    const auto& s = node(i);
    return std::binary_search(s.begin(), s.end(), p);
}

ValidationReport validate_fr(const FrCode& code)
{
    ValidationReport report;
    auto& out = report.violations;
    const auto& p = code.params();

    if (p.n < 1 || p.d < 1 || p.rho < 1 || p.theta < 1) {
        std::ostringstream os;
        os << "parameters must be positive (n=" << p.n << ", d=" << p.d << ", rho=" << p.rho
           << ", theta=" << p.theta << ")";
        out.push_back(os.str());
        return report;
    }
    if (static_cast<std::int64_t>(p.theta) * p.rho != static_cast<std::int64_t>(p.n) * p.d) {
        std::ostringstream os;
        os << "theta*rho = " << static_cast<std::int64_t>(p.theta) * p.rho
           << " differs from n*d = " << static_cast<std::int64_t>(p.n) * p.d;
        out.push_back(os.str());
    }
    if (static_cast<int>(code.nodes().size()) != p.n) {
        out.push_back("expected " + std::to_string(p.n) + " node sets, found " +
                      std::to_string(code.nodes().size()));
    }

    std::vector<int> multiplicity(static_cast<std::size_t>(p.theta) + 1, 0);
    for (std::size_t i = 0; i < code.nodes().size(); ++i) {
        const auto& s = code.nodes()[i];
        const std::string node = "node " + std::to_string(i + 1);
        if (static_cast<int>(s.size()) != p.d)
            out.push_back(node + " stores " + std::to_string(s.size()) + " packets, expected " +
                          std::to_string(p.d));
        for (std::size_t j = 0; j < s.size(); ++j) {
            const PacketId pkt = s[j];
            if (pkt < 1 || pkt > p.theta) {
                out.push_back(node + " holds out-of-range packet " + std::to_string(pkt));
                continue;
            }
            if (j > 0 && s[j - 1] == pkt) {
                out.push_back(node + " holds packet " + std::to_string(pkt) + " more than once");
                continue;
            }
            ++multiplicity[static_cast<std::size_t>(pkt)];
        }
    }
    for (int pkt = 1; pkt <= p.theta; ++pkt) {
        const int m = multiplicity[static_cast<std::size_t>(pkt)];
        if (m != p.rho)
            out.push_back("packet " + std::to_string(pkt) + " appears " + std::to_string(m) +
                          " times, expected " + std::to_string(p.rho));
    }
    return report;
}

std::int64_t c_mbr(int n, int k, int d)
{
    if (!(1 <= k && k <= d && d < n))
        throw ParameterError("c_mbr needs 1 <= k <= d < n (n=" + std::to_string(n) + ", k=" +
                             std::to_string(k) + ", d=" + std::to_string(d) + ")");
    const std::int64_t kk = k;
    return kk * d - kk * (kk - 1) / 2;
}

std::uint64_t binomial_saturating(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > kMax)
            return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

// Depth-first walk over k-subsets in lexicographic order. A partial union
// only grows as nodes are added, so any branch whose union already reaches
// the current minimum is abandoned.
class MinUnionSearch {
public:
    MinUnionSearch(const FrCode& code, int k)
        : code_(code), k_(k), count_(static_cast<std::size_t>(code.theta()) + 1, 0),
          best_(std::numeric_limits<int>::max()), floor_(std::numeric_limits<int>::max())
    {
        for (const auto& s : code.nodes())
            floor_ = std::min(floor_, static_cast<int>(s.size()));
    }

    int run()
    {
        descend(0, 0, 0);
        return best_;
    }

private:
    void descend(int first, int depth, int size)
    {
        if (depth == k_) {
            best_ = std::min(best_, size);
            return;
        }
        const int n = code_.n();
        for (int i = first; i <= n - (k_ - depth); ++i) {
            if (best_ == floor_)
                return;
            int grown = size;
            const auto& s = code_.nodes()[static_cast<std::size_t>(i)];
            for (PacketId p : s)
                if (count_[static_cast<std::size_t>(p)]++ == 0)
                    ++grown;
            if (grown < best_)
                descend(i + 1, depth + 1, grown);
            for (PacketId p : s)
                --count_[static_cast<std::size_t>(p)];
        }
    }

    const FrCode& code_;
    int k_;
    std::vector<int> count_;
    int best_;
    // No k-subset can see fewer packets than the smallest node stores.
    int floor_;
};

} // namespace

Rate rate(const FrCode& code, int k, std::uint64_t cap)
{
    if (k < 1 || k > code.n())
        throw ParameterError("rate needs 1 <= k <= n (k=" + std::to_string(k) + ", n=" +
                             std::to_string(code.n()) + ")");
    const auto subsets = binomial_saturating(code.n(), k);
    if (subsets > cap)
        throw EnumerationCapError("C(" + std::to_string(code.n()) + "," + std::to_string(k) +
                                  ") = " + std::to_string(subsets) + " exceeds enumeration cap " +
                                  std::to_string(cap));
    return Rate{k, MinUnionSearch(code, k).run()};
}

GoodnessReport is_universally_good(const FrCode& code, std::uint64_t cap)
{
    GoodnessReport report;
    for (int k = 1; k <= code.d(); ++k) {
        const auto margin = rate(code, k, cap).value - c_mbr(code.n(), k, code.d());
        report.margins.push_back(margin);
        if (margin < 0)
            report.good = false;
    }
    return report;
}

namespace {

int intersection_size(const NodeSet& a, const NodeSet& b)
{
    int common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

} // namespace

std::vector<int> pairwise_intersection_profile(const FrCode& code)
{
    std::vector<int> sizes;
    const auto& nodes = code.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            sizes.push_back(intersection_size(nodes[i], nodes[j]));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

int max_pairwise_intersection(const FrCode& code)
{
    const auto sizes = pairwise_intersection_profile(code);
    return sizes.empty() ? 0 : sizes.back();
}

} // namespace frc
