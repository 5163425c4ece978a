#pragma once

#include <vector>

#include "cordic/spherical3d.hpp"

namespace cordic {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Floating-point references: x = r sin t cos p, y = r sin t sin p, z = r cos t.
Vec3 spherical_oracle(double r, double theta_deg, double phi_deg);
Vec2 polar_oracle(double r, double theta_deg);

// One comparison row; channel k holds theoretical (oracle quantized through
// real_to_mag_code), simulated (fixed-point engine), and |diff| in counts.
struct ErrorRow {
    std::vector<int16_t> inputs;
    std::vector<int16_t> theoretical;
    std::vector<int16_t> simulated;
    std::vector<int> deviation;
    bool in_range = true;  // false: input rejected, row flagged not dropped
};

struct ErrorReport {
    std::vector<ErrorRow> rows;
    std::vector<double> averages;  // mean deviation per channel, in counts
    bool has_averages = false;     // false when no usable rows

    int max_deviation() const;
};

struct Case3d {
    MagCode r;
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

// Per-angle cos/sin comparison in the paper's table-4 layout. The
// theoretical channel is evaluated at the requested degree value; the
// simulated channel runs sin_cos on its AngleCode encoding.
ErrorReport report_2d(const std::vector<double>& angles_deg, const AtanLut& lut,
                      const CordicConfig& cfg);

// Three-channel comparison; the theoretical channel follows the mode's gain
// law (paper-faithful keeps G^2 on x/y and G on z).
ErrorReport report_3d(const std::vector<Case3d>& cases, GainMode mode,
                      const AtanLut& lut, const CordicConfig& cfg);

}  // namespace cordic
