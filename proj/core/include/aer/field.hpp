#ifndef AER_FIELD_HPP
#define AER_FIELD_HPP

#include <cstdint>

#include "aer/errors.hpp"

namespace aer::gf256 {

// GF(2^8) with the Rijndael reduction polynomial x^8+x^4+x^3+x+1 (0x11B).
// Bit i of a byte is the coefficient of x^i. 0x03 = 1+x generates the
// multiplicative group.

using Elem = std::uint8_t;

inline constexpr Elem zero = 0x00;
inline constexpr Elem one = 0x01;
inline constexpr Elem generator = 0x03;

inline constexpr Elem add(Elem a, Elem b) { return a ^ b; }

Elem mul(Elem a, Elem b);

// a^e by square-and-multiply; pow(a,0) = 1 for every a including zero.
Elem pow(Elem a, std::uint64_t e);

// a^254; throws ZeroInverse for a = 0.
Elem inv(Elem a);

// Smallest d >= 1 with a^d = 1; always a divisor of 255.
int element_order(Elem a);

} // namespace aer::gf256

#endif
