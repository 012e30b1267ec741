#include "frc/bounds.hpp"

#include "frc/constructions.hpp"
#include "frc/designs.hpp"
#include "frc/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bitset>
#include <chrono>
#include <functional>

namespace frc {

using boost::multiprecision::cpp_int;

namespace {

cpp_int binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    cpp_int acc = 1;
    for (int i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return acc;
}

void check_divisible(int n, int d, int rho)
{
    if (n < 1 || d < 1 || rho < 1)
        throw ParameterError("n, d and rho must be positive");
    if ((static_cast<std::int64_t>(n) * d) % rho != 0)
        throw ParameterError("rho=" + std::to_string(rho) + " does not divide n*d=" +
                             std::to_string(static_cast<std::int64_t>(n) * d));
}

// Ceiling division for a possibly negative numerator and positive divisor.
std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    const std::int64_t q = a / b;
    return q + ((a % b != 0) && (a > 0) ? 1 : 0);
}

} // namespace

std::int64_t averaging_bound(int n, int k, int d, int rho)
{
    check_divisible(n, d, rho);
    if (k < 1 || k > n)
        throw ParameterError("averaging bound needs 1 <= k <= n");
    const cpp_int theta = cpp_int(n) * d / rho;
    const cpp_int all = binomial(n, k);
    const cpp_int missing = binomial(n - rho, k);
    const cpp_int value = theta * (all - missing) / all;
    return value.convert_to<std::int64_t>();
}

std::int64_t recursive_bound(int n, int k, int d, int rho)
{
    check_divisible(n, d, rho);
    if (k < 1 || k >= n)
        throw ParameterError("recursive bound needs 1 <= k < n");
    std::int64_t g = d;
    for (std::int64_t j = 1; j < k; ++j)
        g = g + d - ceil_div(rho * g - j * d, n - j);
    return g;
}

namespace {

constexpr int kMaxSearchPackets = 256;
using PacketMask = std::bitset<kMaxSearchPackets + 1>;

class CapacitySearch {
public:
    CapacitySearch(int n, int d, int rho, int k, SearchBudget budget)
        : n_(n), d_(d), rho_(rho), k_(k), theta_(n * d / rho), budget_(budget),
          count_(static_cast<std::size_t>(theta_) + 1, 0),
          ceiling_(static_cast<int>(averaging_bound(n, k, d, rho))),
          start_(std::chrono::steady_clock::now())
    {
    }

    SearchResult run()
    {
        place(0, 0, kUnbounded);
        SearchResult out;
        out.exact = !timed_out_;
        out.value = best_;
        out.nodes_visited = visited_;
        if (!witness_.empty())
            out.witness = FrCode({n_, d_, rho_, theta_}, witness_);
        return out;
    }

private:
    static constexpr int kUnbounded = 1 << 30;

    bool out_of_time()
    {
        if (timed_out_)
            return true;
        if ((++visited_ & 0x3ff) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            timed_out_ = elapsed.count() > budget_.seconds;
        }
        return timed_out_;
    }

    bool done() const { return timed_out_ || best_ >= ceiling_; }

    // Smallest union over k-subsets of the placed nodes that include node i.
    int min_union_with(int i)
    {
        int best = kUnbounded;
        std::vector<int> pick;
        std::function<void(int, PacketMask)> rec = [&](int first, PacketMask acc) {
            if (static_cast<int>(pick.size()) == k_ - 1) {
                best = std::min(best, static_cast<int>(acc.count()));
                return;
            }
            for (int j = first; j < i; ++j) {
                if (i - j < (k_ - 1) - static_cast<int>(pick.size()))
                    break;
                pick.push_back(j);
                rec(j + 1, acc | masks_[static_cast<std::size_t>(j)]);
                pick.pop_back();
            }
        };
        rec(0, masks_[static_cast<std::size_t>(i)]);
        return best;
    }

    // Remaining demand must fit in the remaining nodes: each packet appears
    // at most once per node, and unused labels still need rho holders.
    bool feasible_after(int placed, int used) const
    {
        const int remaining = n_ - placed;
        if (used < theta_ && rho_ > remaining)
            return false;
        for (int p = 1; p <= used; ++p)
            if (rho_ - count_[static_cast<std::size_t>(p)] > remaining)
                return false;
        return true;
    }

    void place(int i, int used, int partial_min)
    {
        if (done() || out_of_time())
            return;
        if (i == n_) {
            if (partial_min > best_) {
                best_ = partial_min;
                witness_ = nodes_;
            }
            return;
        }
        // Candidate labels: old ones with spare replicas, then new ones in order.
        std::vector<int> pool;
        for (int p = 1; p <= used; ++p)
            if (count_[static_cast<std::size_t>(p)] < rho_)
                pool.push_back(p);
        for (int p = used + 1; p <= std::min(theta_, used + d_); ++p)
            pool.push_back(p);

        NodeSet current;
        choose(i, used, partial_min, pool, 0, current);
    }

    void choose(int i, int used, int partial_min, const std::vector<int>& pool, std::size_t from, NodeSet& current)
    {
        if (done())
            return;
        if (static_cast<int>(current.size()) == d_) {
            if (i > 0 && current < nodes_.back())
                return;
            commit(i, used, partial_min, current);
            return;
        }
        const std::size_t need = static_cast<std::size_t>(d_) - current.size();
        for (std::size_t idx = from; idx + need <= pool.size(); ++idx) {
            const int p = pool[idx];
            // A new label may only be taken right after its predecessor.
            if (p > used + 1 && (current.empty() || current.back() != p - 1))
                break;
            current.push_back(p);
            // Prefix already exceeds the previous node set: every completion
            // is admissible; prefix below it at this position: none is.
            if (i == 0 || !prefix_below(current, nodes_.back()))
                choose(i, used, partial_min, pool, idx + 1, current);
            current.pop_back();
        }
    }

    static bool prefix_below(const NodeSet& prefix, const NodeSet& prev)
    {
        for (std::size_t j = 0; j < prefix.size(); ++j) {
            if (prefix[j] != prev[j])
                return prefix[j] < prev[j];
        }
        return false;
    }

    void commit(int i, int used, int partial_min, const NodeSet& set)
    {
        int new_used = used;
        PacketMask mask;
        for (int p : set) {
            ++count_[static_cast<std::size_t>(p)];
            new_used = std::max(new_used, p);
            mask.set(static_cast<std::size_t>(p));
        }
        nodes_.push_back(set);
        masks_.push_back(mask);

        if (feasible_after(i + 1, new_used)) {
            int bound = partial_min;
            if (i + 1 >= k_)
                bound = std::min(bound, min_union_with(i));
            if (bound > best_)
                place(i + 1, new_used, bound);
        }

        masks_.pop_back();
        nodes_.pop_back();
        for (int p : set)
            --count_[static_cast<std::size_t>(p)];
    }

    int n_, d_, rho_, k_, theta_;
    SearchBudget budget_;
    std::vector<int> count_;
    std::vector<NodeSet> nodes_;
    std::vector<PacketMask> masks_;
    int ceiling_;
    int best_ = -1;
    std::vector<NodeSet> witness_;
    std::uint64_t visited_ = 0;
    bool timed_out_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

SearchResult fr_capacity_search(int n, int d, int rho, int k, SearchBudget budget)
{
    check_divisible(n, d, rho);
    if (d >= n)
        throw ParameterError("need d < n");
    if (rho > n)
        throw ParameterError("rho=" + std::to_string(rho) + " exceeds n=" + std::to_string(n) +
                             ": no packet can be replicated on that many distinct nodes");
    if (k < 1 || k > n)
        throw ParameterError("need 1 <= k <= n");
    const int theta = n * d / rho;
    if (theta > kMaxSearchPackets || static_cast<std::int64_t>(n) * theta > budget.max_cells)
        throw ParameterError("search space too large: n*theta=" + std::to_string(static_cast<std::int64_t>(n) * theta) +
                             " exceeds guard " + std::to_string(budget.max_cells));
    return CapacitySearch(n, d, rho, k, budget).run();
}

std::optional<BestKnown> best_known_construction(int n, int d, int rho, int k)
{
    std::vector<FrCode> candidates;
    if (rho == 2 && d >= 1 && d < n && (n * d) % 2 == 0)
        candidates.push_back(regular_graph_code(n, d));
    if (n == 6 && d == 3 && rho == 2)
        candidates.push_back(grid_code());
    // Steiner triple systems: direct codes have d = 3, v = 2*rho + 1;
    // transpose codes have rho = 3, v = n.
    auto sts = [](int v) -> std::optional<SteinerSystem> {
        if (v == 7)
            return fano_plane();
        if (v >= 7 && (v % 6 == 1 || v % 6 == 3))
            return steiner_triple_system(v);
        return std::nullopt;
    };
    if (d == 3) {
        if (auto sys = sts(2 * rho + 1); sys && sys->b() == n)
            candidates.push_back(direct_code(*sys));
    }
    if (rho == 3) {
        if (auto sys = sts(n); sys && sys->r() == d)
            candidates.push_back(transpose_code(*sys));
    }

    std::optional<BestKnown> best;
    for (auto& code : candidates) {
        if (k < 1 || k > code.n() || binomial_saturating(code.n(), k) > kDefaultEnumerationCap)
            continue;
        const int value = rate(code, k).value;
        if (!best || value > best->value)
            best = BestKnown{value, std::move(code)};
    }
    return best;
}

CapacityReport capacity_report(const DssParams& params, std::optional<SearchBudget> budget)
{
    CapacityReport report;
    report.params = params;
    report.averaging = averaging_bound(params.n, params.k, params.d, params.rho);
    report.recursive = recursive_bound(params.n, params.k, params.d, params.rho);
    report.best_known = best_known_construction(params.n, params.d, params.rho, params.k);
    if (budget)
        report.search = fr_capacity_search(params.n, params.d, params.rho, params.k, *budget);
    return report;
}

} // namespace frc
