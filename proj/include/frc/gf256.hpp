#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace frc::gf256 {

/// GF(2^8) modulo x^8 + x^4 + x^3 + x + 1. Addition is XOR.
inline constexpr unsigned kPolynomial = 0x11B;

using Element = std::uint8_t;

inline Element add(Element a, Element b) { return static_cast<Element>(a ^ b); }

Element mul(Element a, Element b);
/// Throws std::domain_error for a == 0.
Element inv(Element a);
Element div(Element a, Element b);

/// Row of the full multiplication table: mul_row(c)[x] == mul(c, x).
std::span<const Element, 256> mul_row(Element c);

/// dst ^= c * src, element-wise.
void axpy(Element c, std::span<const Element> src, std::span<Element> dst);

} // namespace frc::gf256
