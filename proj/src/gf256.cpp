#include "frc/gf256.hpp"

#include <algorithm>
#include <stdexcept>

namespace frc::gf256 {

namespace {

struct Tables {
    std::array<Element, 512> exp{};
    std::array<int, 256> log{};
    std::array<std::array<Element, 256>, 256> product{};

    Tables()
    {
        // 0x03 generates the multiplicative group for this polynomial.
        unsigned x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[static_cast<std::size_t>(i)] = static_cast<Element>(x);
            log[x] = i;
            unsigned times2 = x << 1;
            if (times2 & 0x100)
                times2 ^= kPolynomial;
            x = times2 ^ x;
        }
        for (int i = 255; i < 512; ++i)
            exp[static_cast<std::size_t>(i)] = exp[static_cast<std::size_t>(i - 255)];
        for (unsigned a = 1; a < 256; ++a)
            for (unsigned b = 1; b < 256; ++b)
                product[a][b] = exp[static_cast<std::size_t>(log[a] + log[b])];
    }
};

const Tables& tables()
{
    static const Tables t;
    return t;
}

} // namespace

Element mul(Element a, Element b) { return tables().product[a][b]; }

Element inv(Element a)
{
    if (a == 0)
        throw std::domain_error("zero has no inverse in GF(256)");
    const auto& t = tables();
    return t.exp[static_cast<std::size_t>(255 - t.log[a])];
}

Element div(Element a, Element b) { return mul(a, inv(b)); }

std::span<const Element, 256> mul_row(Element c) { return std::span<const Element, 256>(tables().product[c]); }

void axpy(Element c, std::span<const Element> src, std::span<Element> dst)
{
    if (c == 0)
        return;
    const auto row = mul_row(c);
    const std::size_t len = std::min(src.size(), dst.size());
    for (std::size_t i = 0; i < len; ++i)
        dst[i] ^= row[src[i]];
}

} // namespace frc::gf256
