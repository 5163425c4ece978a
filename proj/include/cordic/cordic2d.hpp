#pragma once

#include <utility>

#include "cordic/fixedpoint.hpp"
#include "cordic/tables.hpp"

namespace cordic {

enum class ShiftMode {
    TruncateArithmetic,  // arithmetic right shift (floor), hardware style
    RoundToNearest,
};

struct CordicConfig {
    int n_iterations = 16;
    int frac_bits = 8;   // extra fractional bits on the z accumulator
    int guard_bits = 3;  // internal x/y fractional guard bits
    ShiftMode shift_mode = ShiftMode::TruncateArithmetic;
    bool range_check = true;
};

// x/y are kept in guard-extended counts (MagCode counts * 2^guard_bits)
// while iterating; mag_x()/mag_y() narrow back with round-half-up.
struct CordicState {
    int32_t x = 0;
    int32_t y = 0;
    int32_t z = 0;  // ExtAngle counts at cfg.frac_bits
    int i = 0;
    int guard_bits = 0;
    int frac_bits = 0;

    MagCode mag_x() const;
    MagCode mag_y() const;
    ExtAngle ext_z() const { return ExtAngle{z, frac_bits}; }
};

struct RotateResult {
    MagCode x;
    MagCode y;
    ExtAngle z;  // residual angle
};

CordicState make_state(MagCode x0, MagCode y0, AngleCode z0,
                       const CordicConfig& cfg);

// One micro-rotation: d = +1 if z >= 0 else -1;
//   x' = x - d*(y >> i), y' = y + d*(x >> i), z' = z - d*atan_lut[i].
// Throws std::logic_error if the iteration index is exhausted.
CordicState micro_rotation(const CordicState& s, const AtanLut& lut,
                           const CordicConfig& cfg);

// Full rotation-mode run: (xn, yn) ~ G_N * (x0 cos z0 - y0 sin z0,
//                                           y0 cos z0 + x0 sin z0).
// With range_check on, |z0| must be <= 99.0 deg (convergence range).
RotateResult rotate2d(MagCode x0, MagCode y0, AngleCode z0, const AtanLut& lut,
                      const CordicConfig& cfg);

// rotate2d seeded with x0 = 1/G_N, y0 = 0: returns (cos, sin) in MagCode.
std::pair<MagCode, MagCode> sin_cos(AngleCode theta, const AtanLut& lut,
                                    const CordicConfig& cfg);

// rotate2d(r, 0, theta): gain-scaled (r cos, r sin).
std::pair<MagCode, MagCode> polar_to_cartesian(MagCode r, AngleCode theta,
                                               const AtanLut& lut,
                                               const CordicConfig& cfg);

}  // namespace cordic
