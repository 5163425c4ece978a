#pragma once

#include <vector>

#include "cordic/fixedpoint.hpp"

namespace cordic {

// arctan(2^-i) table in ExtAngle counts (AngleCode counts * 2^frac_bits).
struct AtanLut {
    std::vector<int32_t> entries;
    int n_iterations = 0;
    int frac_bits = 0;
};

struct GainConstants {
    double gain = 0.0;          // G_N = prod sqrt(1 + 2^-2i), i = 0..N-1
    MagCode inv_gain_code;      // round(1e4 / G_N)
    MagCode inv_gain_sq_code;   // round(1e4 / G_N^2)
};

// entries[i] = round_half_up(arctan(2^-i) in degrees * 65536/720 * 2^frac_bits).
// Requires 1 <= n <= 32 and 0 <= frac_bits <= 12.
AtanLut build_atan_lut(int n, int frac_bits);

double cordic_gain(int n);  // requires n >= 1
GainConstants gain_constants(int n);

}  // namespace cordic
