#include "cordic/spherical3d.hpp"

#include <stdexcept>
#include <string>

namespace cordic {

CartesianTriple spherical_to_cartesian(const SphericalInput& in, GainMode mode,
                                       const AtanLut& lut,
                                       const CordicConfig& cfg) {
    const GainConstants gc = gain_constants(cfg.n_iterations);
    if (in.r.raw < 0) {
        throw std::out_of_range("radius must be non-negative, got " +
                                std::to_string(in.r.raw) + " counts");
    }

    MagCode r = in.r;
    if (mode == GainMode::GainCorrected) {
        // one double-width multiply, then narrow
        r = MagCode{static_cast<int16_t>(
            round_half_up(static_cast<double>(in.r.raw) / (gc.gain * gc.gain)))};
    }
    // |r'| <= 1/G^2 keeps every 16-bit intermediate in range through both
    // gain-scaled stages.
    if (r.raw > gc.inv_gain_sq_code.raw) {
        throw std::out_of_range(
            "radius " + std::to_string(in.r.raw) + " counts exceeds safe input "
            "magnitude (prescaled radius must be <= " +
            std::to_string(gc.inv_gain_sq_code.raw) + " counts = 1/G^2)");
    }

    const RotateResult stage1 = rotate2d(r, MagCode{0}, in.theta, lut, cfg);
    const RotateResult stage2 = rotate2d(stage1.y, MagCode{0}, in.phi, lut, cfg);

    MagCode z = stage1.x;
    if (mode == GainMode::GainCorrected) {
        z = MagCode{static_cast<int16_t>(
            round_half_up(static_cast<double>(z.raw) * gc.gain))};
    }
    return CartesianTriple{stage2.x, stage2.y, z};
}

int latency(Dims dims, const CordicConfig& cfg) {
    return dims == Dims::TwoD ? cfg.n_iterations : 2 * cfg.n_iterations;
}

}  // namespace cordic
