#pragma once

// Reference even-parity eigenvalues nu, five levels per coupling, to four
// decimals. Kept in sync with data/even_levels_reference.csv.

#include <array>
#include <cstddef>

namespace deltaho::reference_table {

inline constexpr std::array<double, 9> couplings = {0.0,  -0.25, 0.25, -1.0, 1.0,
                                                    -2.5, 2.5,   -5.0, 5.0};

inline constexpr std::size_t levels = 5;

// reference[row][column], column order as in `couplings`.
inline constexpr std::array<std::array<double, 9>, levels> reference = {{
    {0.0, -0.1557, 0.1281, -0.8424, 0.3927, -3.5865, 0.6434, -12.9900, 0.7961},
    {2.0, 1.9288, 2.0693, 1.7208, 2.2546, 1.4285, 2.5042, 1.2305, 2.7003},
    {4.0, 3.9469, 4.0525, 3.7912, 4.2002, 3.5420, 4.4274, 3.3227, 4.6364},
    {6.0, 5.9558, 6.0439, 5.8258, 6.1699, 5.6051, 6.3772, 5.3833, 6.5887},
    {8.0, 7.9614, 8.0384, 7.8473, 8.1501, 7.6473, 8.3412, 7.4285, 8.5509},
}};

/// Rounding half-width of a four-decimal entry plus slack for the author's
/// own root-finding error.
inline constexpr double tolerance = 5e-4;

}  // namespace deltaho::reference_table
