#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace peano {

/// Arbitrary-precision integer used for triadic numerators and keys.
/// Digit depths of a few hundred must not overflow, so fixed-width
/// integers are not enough.
using BigInt = boost::multiprecision::cpp_int;

/// 3^e as a BigInt.
inline BigInt pow3(unsigned e)
{
    BigInt r = 1;
    BigInt b = 3;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

/// 3^e in a fixed 64-bit word; valid for e <= 40.
inline std::uint64_t pow3_u64(unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned q = 0; q < e; ++q) r *= 3u;
    return r;
}

} // namespace peano
