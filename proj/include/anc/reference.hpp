#pragma once

#include <array>
#include <cstdint>

namespace anc {

// First 51 terms of OEIS A152061: the number of periodic binary words of
// length n, n = 0..50. Used by the verify command to cross-check
// periodic_count against an independent source.
inline constexpr std::array<std::uint64_t, 51> kA152061 = {
    0,       0,       2,       2,        4,        2,        10,
    2,       16,      8,       34,       2,        76,       2,
    130,     38,      256,     2,        568,      2,        1036,
    134,     2050,    2,       4336,     32,       8194,     512,
    16396,   2,       33814,   2,        65536,    2054,     131074,
    158,     266176,  2,       524290,   8198,     1048816,  2,
    2113462, 2,       4194316, 33272,    8388610,  2,        16842496,
    128,     33555424};

} // namespace anc
