#include "cordic/cordic2d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cordic {

namespace {

constexpr double kConvergenceLimitDeg = 99.0;

int32_t shift_right(int32_t v, int i, ShiftMode mode) {
    if (i == 0) return v;
    if (mode == ShiftMode::RoundToNearest) {
        return (v + (int32_t{1} << (i - 1))) >> i;
    }
    return v >> i;  // arithmetic shift, floor
}

int16_t narrow_guarded(int32_t v, int guard_bits) {
    int32_t counts = v;
    if (guard_bits > 0) {
        counts = (v + (int32_t{1} << (guard_bits - 1))) >> guard_bits;
    }
    if (counts < INT16_MIN || counts > INT16_MAX) {
        throw std::overflow_error("x/y datapath overflow: " +
                                  std::to_string(counts) + " counts");
    }
    return static_cast<int16_t>(counts);
}

}  // namespace

MagCode CordicState::mag_x() const { return MagCode{narrow_guarded(x, guard_bits)}; }
MagCode CordicState::mag_y() const { return MagCode{narrow_guarded(y, guard_bits)}; }

CordicState make_state(MagCode x0, MagCode y0, AngleCode z0,
                       const CordicConfig& cfg) {
    CordicState s;
    s.x = static_cast<int32_t>(x0.raw) << cfg.guard_bits;
    s.y = static_cast<int32_t>(y0.raw) << cfg.guard_bits;
    s.z = static_cast<int32_t>(z0.raw) << cfg.frac_bits;
    s.i = 0;
    s.guard_bits = cfg.guard_bits;
    s.frac_bits = cfg.frac_bits;
    return s;
}

CordicState micro_rotation(const CordicState& s, const AtanLut& lut,
                           const CordicConfig& cfg) {
    if (s.i >= lut.n_iterations) {
        throw std::logic_error("micro_rotation: iteration index " +
                               std::to_string(s.i) + " exhausted (LUT has " +
                               std::to_string(lut.n_iterations) + " entries)");
    }
    const int32_t d = s.z >= 0 ? 1 : -1;  // tie at z == 0 rotates positive
    const int32_t xs = shift_right(s.y, s.i, cfg.shift_mode);
    const int32_t ys = shift_right(s.x, s.i, cfg.shift_mode);
    CordicState out = s;
    out.x = s.x - d * xs;
    out.y = s.y + d * ys;
    out.z = s.z - d * lut.entries[static_cast<size_t>(s.i)];
    out.i = s.i + 1;
    return out;
}

RotateResult rotate2d(MagCode x0, MagCode y0, AngleCode z0, const AtanLut& lut,
                      const CordicConfig& cfg) {
    if (lut.n_iterations != cfg.n_iterations || lut.frac_bits != cfg.frac_bits) {
        throw std::invalid_argument(
            "rotate2d: LUT does not match config (iterations/frac_bits)");
    }
    if (cfg.range_check) {
        const double deg = angle_code_to_degrees(z0);
        if (std::abs(deg) > kConvergenceLimitDeg) {
            throw std::domain_error(
                "rotation angle " + std::to_string(deg) +
                " deg outside CORDIC convergence range +/-99.0 deg");
        }
    }
    CordicState s = make_state(x0, y0, z0, cfg);
    for (int i = 0; i < cfg.n_iterations; ++i) {
        s = micro_rotation(s, lut, cfg);
    }
    return RotateResult{s.mag_x(), s.mag_y(), s.ext_z()};
}

std::pair<MagCode, MagCode> sin_cos(AngleCode theta, const AtanLut& lut,
                                    const CordicConfig& cfg) {
    const GainConstants gc = gain_constants(cfg.n_iterations);
    const RotateResult r = rotate2d(gc.inv_gain_code, MagCode{0}, theta, lut, cfg);
    return {r.x, r.y};
}

std::pair<MagCode, MagCode> polar_to_cartesian(MagCode r, AngleCode theta,
                                               const AtanLut& lut,
                                               const CordicConfig& cfg) {
    const RotateResult res = rotate2d(r, MagCode{0}, theta, lut, cfg);
    return {res.x, res.y};
}

}  // namespace cordic
