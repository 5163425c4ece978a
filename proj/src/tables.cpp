#include "cordic/tables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cordic {

AtanLut build_atan_lut(int n, int frac_bits) {
    if (n < 1 || n > 32) {
        throw std::invalid_argument("iteration count must be in [1, 32]");
    }
    if (frac_bits < 0 || frac_bits > 12) {
        throw std::invalid_argument("frac_bits must be in [0, 12]");
    }
    AtanLut lut;
    lut.n_iterations = n;
    lut.frac_bits = frac_bits;
    lut.entries.reserve(static_cast<size_t>(n));
    const double scale = 65536.0 / 720.0 * static_cast<double>(1 << frac_bits);
    for (int i = 0; i < n; ++i) {
        const double deg =
            std::atan(std::ldexp(1.0, -i)) * 180.0 / std::numbers::pi;
        lut.entries.push_back(static_cast<int32_t>(round_half_up(deg * scale)));
    }
    return lut;
}

double cordic_gain(int n) {
    if (n < 1) throw std::invalid_argument("iteration count must be >= 1");
    double g = 1.0;
    for (int i = 0; i < n; ++i) {
        g *= std::sqrt(1.0 + std::ldexp(1.0, -2 * i));
    }
    return g;
}

GainConstants gain_constants(int n) {
    GainConstants gc;
    gc.gain = cordic_gain(n);
    gc.inv_gain_code = real_to_mag_code(1.0 / gc.gain);
    gc.inv_gain_sq_code = real_to_mag_code(1.0 / (gc.gain * gc.gain));
    return gc;
}

}  // namespace cordic
