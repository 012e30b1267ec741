#include "frc/constructions.hpp"

#include "frc/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace frc {

namespace {

void check_graph_params(int n, int d)
{
    if (n < 2 || d < 1 || d >= n)
        throw ParameterError("need 1 <= d < n (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw ParameterError("nd odd (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

RegularGraph from_edge_set(int n, int d, const std::set<std::pair<int, int>>& edges)
{
    return RegularGraph{n, d, {edges.begin(), edges.end()}};
}

std::set<std::pair<int, int>> complement(int n, const std::set<std::pair<int, int>>& edges)
{
    std::set<std::pair<int, int>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (!edges.count({a, b}))
                out.insert({a, b});
    return out;
}

// One pairing-model attempt: d copies of each vertex, shuffled and paired.
std::optional<std::set<std::pair<int, int>>> pairing_attempt(int n, int d, std::mt19937_64& rng)
{
    std::vector<int> points;
    points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 1; v <= n; ++v)
        for (int c = 0; c < d; ++c)
            points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);

    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
        if (points[i] == points[i + 1])
            return std::nullopt;
        if (!edges.insert(ordered(points[i], points[i + 1])).second)
            return std::nullopt;
    }
    return edges;
}

} // namespace

RegularGraph circulant_graph(int n, int d)
{
    check_graph_params(n, d);
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int s = 1; s <= d / 2; ++s)
            edges.insert(ordered(i + 1, (i + s) % n + 1));
        if (d % 2 == 1)
            edges.insert(ordered(i + 1, (i + n / 2) % n + 1));
    }
    return from_edge_set(n, d, edges);
}

RegularGraph random_regular_graph(int n, int d, std::uint64_t seed, int max_retries)
{
    check_graph_params(n, d);
    std::mt19937_64 rng(seed);

    // Sampling the sparser of the graph and its complement keeps the
    // rejection rate low; n*(n-1-d) is even whenever n*d is.
    const bool flip = d > (n - 1) / 2;
    const int target = flip ? n - 1 - d : d;
    if (target == 0) {
        const std::set<std::pair<int, int>> none;
        return from_edge_set(n, d, flip ? complement(n, none) : none);
    }
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        if (auto edges = pairing_attempt(n, target, rng))
            return from_edge_set(n, d, flip ? complement(n, *edges) : *edges);
    }

    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 1);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : circulant_graph(n, d).edges)
        edges.insert(ordered(relabel[static_cast<std::size_t>(a - 1)], relabel[static_cast<std::size_t>(b - 1)]));
    return from_edge_set(n, d, edges);
}

FrCode graph_code(const RegularGraph& g)
{
    std::vector<NodeSet> nodes(static_cast<std::size_t>(g.n));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [a, b] = g.edges[e];
        nodes[static_cast<std::size_t>(a - 1)].push_back(static_cast<PacketId>(e + 1));
        nodes[static_cast<std::size_t>(b - 1)].push_back(static_cast<PacketId>(e + 1));
    }
    return FrCode({g.n, g.d, 2, static_cast<int>(g.edges.size())}, std::move(nodes));
}

FrCode complete_graph_code(int n)
{
    if (n < 3)
        throw ParameterError("complete graph code needs n >= 3 (n=" + std::to_string(n) + ")");
    std::set<std::pair<int, int>> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            edges.insert({a, b});
    return graph_code(from_edge_set(n, n - 1, edges));
}

FrCode regular_graph_code(int n, int d, std::optional<std::uint64_t> seed)
{
    return graph_code(seed ? random_regular_graph(n, d, *seed) : circulant_graph(n, d));
}

namespace {

void require_valid(const SteinerSystem& sys)
{
    const auto report = validate_steiner(sys);
    if (!report.ok())
        throw InvalidDesignError("Steiner system does not validate: " + report.violations.front());
}

} // namespace

FrCode direct_code(const SteinerSystem& sys)
{
    require_valid(sys);
    return FrCode({sys.b(), sys.alpha, sys.r(), sys.v}, sys.blocks);
}

FrCode transpose_code(const SteinerSystem& sys)
{
    require_valid(sys);
    std::vector<NodeSet> nodes(static_cast<std::size_t>(sys.v));
    for (std::size_t j = 0; j < sys.blocks.size(); ++j)
        for (int point : sys.blocks[j])
            nodes[static_cast<std::size_t>(point - 1)].push_back(static_cast<PacketId>(j + 1));
    return FrCode({sys.v, sys.r(), sys.alpha, sys.b()}, std::move(nodes));
}

FrCode grid_code()
{
    return FrCode({6, 3, 2, 9}, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
}

} // namespace frc
