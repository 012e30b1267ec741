#include "frc/designs.hpp"

#include "frc/error.hpp"

#include <algorithm>
#include <set>

namespace frc {

SteinerParams steiner_params(int alpha, int v)
{
    SteinerParams out;
    if (alpha < 2 || v < alpha) {
        out.reason = "need alpha >= 2 and v >= alpha";
        return out;
    }
    if ((v - 1) % (alpha - 1) != 0) {
        out.reason = "v-1=" + std::to_string(v - 1) + " not divisible by alpha-1=" + std::to_string(alpha - 1);
        return out;
    }
    const int r = (v - 1) / (alpha - 1);
    const long long vr = static_cast<long long>(v) * r;
    if (vr % alpha != 0) {
        out.reason = "v*r=" + std::to_string(vr) + " not divisible by alpha=" + std::to_string(alpha);
        return out;
    }
    out.feasible = true;
    out.r = r;
    out.b = static_cast<int>(vr / alpha);
    return out;
}

namespace {

SteinerSystem make_triple_system(int v, std::vector<Block> blocks)
{
    for (auto& blk : blocks)
        std::sort(blk.begin(), blk.end());
    return SteinerSystem{2, 3, v, std::move(blocks)};
}

// v = 6s+3. Points Z_q x Z_3 with q = 2s+1, using the idempotent commutative
// quasigroup x o y = (x+y)/2 mod q. Point (x, i) is labelled i*q + x + 1.
SteinerSystem bose(int v)
{
    const int q = v / 3;
    const int half = (q + 1) / 2; // inverse of 2 mod q
    auto label = [q](int x, int i) { return (i % 3) * q + x + 1; };
    auto op = [q, half](int x, int y) { return (x + y) * half % q; };

    std::vector<Block> blocks;
    for (int x = 0; x < q; ++x)
        blocks.push_back({label(x, 0), label(x, 1), label(x, 2)});
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < q; ++x)
            for (int y = x + 1; y < q; ++y)
                blocks.push_back({label(x, i), label(y, i), label(op(x, y), i + 1)});
    return make_triple_system(v, std::move(blocks));
}

// v = 6s+1. Points Z_2s x Z_3 plus infinity, using the half-idempotent
// commutative quasigroup x o y = sigma(x+y mod 2s), sigma(2j) = j,
// sigma(2j+1) = s+j. Point (x, i) is labelled i*2s + x + 1, infinity is v.
SteinerSystem skolem(int v)
{
    const int s = (v - 1) / 6;
    const int q = 2 * s;
    auto label = [q](int x, int i) { return (i % 3) * q + x + 1; };
    auto op = [q, s](int x, int y) {
        const int z = (x + y) % q;
        return z % 2 == 0 ? z / 2 : s + z / 2;
    };
    const int inf = v;

    std::vector<Block> blocks;
    for (int x = 0; x < s; ++x)
        blocks.push_back({label(x, 0), label(x, 1), label(x, 2)});
    for (int x = 0; x < s; ++x)
        for (int i = 0; i < 3; ++i)
            blocks.push_back({inf, label(x + s, i), label(x, i + 1)});
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < q; ++x)
            for (int y = x + 1; y < q; ++y)
                blocks.push_back({label(x, i), label(y, i), label(op(x, y), i + 1)});
    return make_triple_system(v, std::move(blocks));
}

} // namespace

SteinerSystem steiner_triple_system(int v)
{
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw ParameterError("no Steiner triple system for v=" + std::to_string(v) + ": v ≢ 1,3 mod 6 or v < 7");
    return v % 6 == 3 ? bose(v) : skolem(v);
}

SteinerSystem fano_plane()
{
    return SteinerSystem{2, 3, 7, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}, {2, 4, 6}}};
}

ValidationReport validate_steiner(const SteinerSystem& sys)
{
    ValidationReport report;
    auto& out = report.violations;
    if (sys.t != 2) {
        out.push_back("only t=2 designs are supported (t=" + std::to_string(sys.t) + ")");
        return report;
    }
    if (sys.v < 2 || sys.alpha < 2) {
        out.push_back("need v >= 2 and alpha >= 2");
        return report;
    }

    const auto v = static_cast<std::size_t>(sys.v);
    std::vector<int> pair_count(v * v, 0);
    std::vector<int> replication(v + 1, 0);
    for (std::size_t j = 0; j < sys.blocks.size(); ++j) {
        const std::string where = "block " + std::to_string(j + 1);
        const std::set<int> pts(sys.blocks[j].begin(), sys.blocks[j].end());
        if (pts.size() != sys.blocks[j].size())
            out.push_back(where + " repeats a point");
        if (static_cast<int>(pts.size()) != sys.alpha)
            out.push_back(where + " has " + std::to_string(pts.size()) + " distinct points, expected " +
                          std::to_string(sys.alpha));
        if (!pts.empty() && (*pts.begin() < 1 || *pts.rbegin() > sys.v)) {
            out.push_back(where + " has a point outside 1.." + std::to_string(sys.v));
            continue;
        }
        for (int a : pts) {
            ++replication[static_cast<std::size_t>(a)];
            for (int b : pts)
                if (a < b)
                    ++pair_count[static_cast<std::size_t>(a - 1) * v + static_cast<std::size_t>(b - 1)];
        }
    }
    for (int a = 1; a <= sys.v; ++a)
        for (int b = a + 1; b <= sys.v; ++b) {
            const int c = pair_count[static_cast<std::size_t>(a - 1) * v + static_cast<std::size_t>(b - 1)];
            const std::string pair = "pair {" + std::to_string(a) + "," + std::to_string(b) + "}";
            if (c == 0)
                out.push_back(pair + " uncovered");
            else if (c > 1)
                out.push_back(pair + " covered " + std::to_string(c) + " times");
        }

    const auto params = steiner_params(sys.alpha, sys.v);
    if (!params.feasible) {
        out.push_back("parameters infeasible: " + params.reason);
        return report;
    }
    if (params.b != sys.b())
        out.push_back("expected b=" + std::to_string(params.b) + " blocks, found " + std::to_string(sys.b()));
    for (int a = 1; a <= sys.v; ++a)
        if (replication[static_cast<std::size_t>(a)] != params.r)
            out.push_back("point " + std::to_string(a) + " lies in " +
                          std::to_string(replication[static_cast<std::size_t>(a)]) + " blocks, expected r=" +
                          std::to_string(params.r));
    return report;
}

} // namespace frc
