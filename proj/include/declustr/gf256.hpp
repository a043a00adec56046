#pragma once

#include <cstdint>

namespace declustr::gf256 {

// GF(2^8) with reducing polynomial x^8 + x^4 + x^3 + x^2 + 1.
inline constexpr unsigned kPolynomial = 0x11D;

std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t div(std::uint8_t a, std::uint8_t b);  // b != 0
std::uint8_t inv(std::uint8_t a);                  // a != 0

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

}  // namespace declustr::gf256
