#include "doctest.h"

#include "oracles.hpp"

#include "frc/error.hpp"
#include "frc/gf256.hpp"
#include "frc/mds.hpp"
#include "frc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <random>

using namespace frc;

namespace {

// Shift-and-add multiplication modulo x^8+x^4+x^3+x+1.
std::uint8_t slow_mul(std::uint8_t a, std::uint8_t b)
{
    unsigned acc = 0;
    unsigned x = a;
    for (int bit = 0; bit < 8; ++bit) {
        if (b & (1u << bit))
            acc ^= x;
        x <<= 1;
        if (x & 0x100)
            x ^= 0x11B;
    }
    return static_cast<std::uint8_t>(acc);
}

Bytes xor_of(const std::vector<Bytes>& packets)
{
    Bytes out(packets.front().size(), 0);
    for (const auto& p : packets)
        for (std::size_t i = 0; i < p.size(); ++i)
            out[i] ^= p[i];
    return out;
}

} // namespace

TEST_CASE("gf256 arithmetic matches shift-and-add")
{
    for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b)
            REQUIRE(gf256::mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) ==
                    slow_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)));
    for (unsigned a = 1; a < 256; ++a)
        CHECK(gf256::mul(static_cast<std::uint8_t>(a), gf256::inv(static_cast<std::uint8_t>(a))) == 1);
    CHECK(gf256::mul(0x57, 0x83) == 0xC1);
    CHECK_THROWS(gf256::inv(0));
}

TEST_CASE("single redundant packet is the XOR of the sources")
{
    const auto file = random_file(9, 64, 11);
    const auto coded = mds_encode(file, 10);
    REQUIRE(coded.size() == 10);
    for (int i = 0; i < 9; ++i)
        CHECK(coded[static_cast<std::size_t>(i)].payload == file.data[static_cast<std::size_t>(i)]);
    CHECK(coded[9].index == 10);
    CHECK(coded[9].payload == xor_of(file.data));
}

TEST_CASE("missing systematic packet recovered from parity")
{
    const auto file = random_file(9, 16, 5);
    auto coded = mds_encode(file, 10);
    coded.erase(coded.begin() + 2);
    const auto decoded = mds_decode(coded, 9, 10);
    CHECK(decoded == file);
    // x_3 = y_10 xor y_1 xor y_2 xor y_4 ... xor y_9
    std::vector<Bytes> others;
    for (const auto& p : coded)
        others.push_back(p.payload);
    CHECK(decoded.data[2] == xor_of(others));
}

TEST_CASE("identity and zero codewords")
{
    const auto file = random_file(5, 8, 1);
    const auto coded = mds_encode(file, 5);
    REQUIRE(coded.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(coded[static_cast<std::size_t>(i)].payload == file.data[static_cast<std::size_t>(i)]);

    SourceFile zero{6, 12, std::vector<Bytes>(6, Bytes(12, 0))};
    for (const auto& p : mds_encode(zero, 7))
        CHECK(p.payload == Bytes(12, 0));
}

TEST_CASE("decode from every m-subset, several (m, theta)")
{
    struct Case {
        int m, theta;
    };
    for (auto c : {Case{6, 7}, Case{3, 7}, Case{4, 10}, Case{1, 5}, Case{2, 12}}) {
        const auto file = random_file(c.m, 10, static_cast<std::uint64_t>(c.m * 100 + c.theta));
        const auto coded = mds_encode(file, c.theta);
        for (std::uint32_t mask = 0; mask < (1u << c.theta); ++mask) {
            if (std::popcount(mask) != c.m)
                continue;
            std::vector<CodedPacket> subset;
            for (int i = 0; i < c.theta; ++i)
                if (mask & (1u << i))
                    subset.push_back(coded[static_cast<std::size_t>(i)]);
            REQUIRE(mds_decode(subset, c.m, c.theta) == file);
        }
    }
}

TEST_CASE("sampled round trips near the field limit")
{
    std::mt19937 rng(9);
    const int m = 40;
    const int theta = 255;
    const MdsCodec codec(m, theta);
    const auto file = random_file(m, 32, 3);
    const auto coded = codec.encode(file);
    std::vector<CodedPacket> pool = coded;
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<CodedPacket> subset(pool.begin(), pool.begin() + m);
        REQUIRE(codec.decode(subset) == file);
    }
}

TEST_CASE("encoding is linear")
{
    const auto a = random_file(5, 20, 1);
    const auto b = random_file(5, 20, 2);
    SourceFile sum = a;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 20; ++j)
            sum.data[i][j] ^= b.data[i][j];
    const auto ca = mds_encode(a, 9);
    const auto cb = mds_encode(b, 9);
    const auto cs = mds_encode(sum, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 20; ++j)
            CHECK(cs[i].payload[j] == (ca[i].payload[j] ^ cb[i].payload[j]));
}

TEST_CASE("mds error paths")
{
    const auto file = random_file(4, 8, 1);
    CHECK_THROWS_AS(mds_encode(file, 256), FieldCapacityError);
    CHECK_THROWS_AS(mds_encode(file, 3), ParameterError);

    auto ragged = file;
    ragged.data[1].push_back(0);
    CHECK_THROWS_AS(mds_encode(ragged, 6), LengthMismatchError);

    const auto coded = mds_encode(file, 6);
    std::vector<CodedPacket> three(coded.begin(), coded.begin() + 3);
    CHECK_THROWS_AS(mds_decode(three, 4, 6), InsufficientPacketsError);
    std::vector<CodedPacket> dup{coded[0], coded[0], coded[1], coded[2]};
    CHECK_THROWS_AS(mds_decode(dup, 4, 6), InsufficientPacketsError);
    auto bad = coded;
    bad[0].index = 7;
    CHECK_THROWS_AS(mds_decode(bad, 4, 6), IndexOutOfRangeError);
}
