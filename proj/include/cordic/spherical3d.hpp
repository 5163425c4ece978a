#pragma once

#include "cordic/cordic2d.hpp"

namespace cordic {

struct SphericalInput {
    MagCode r;        // radial distance, >= 0
    AngleCode theta;  // inclination from zenith
    AngleCode phi;    // azimuth
};

struct CartesianTriple {
    MagCode x;
    MagCode y;
    MagCode z;
};

enum class GainMode {
    // r is already prescaled by 1/G^2 by the caller; z keeps a residual
    // 1/G factor. Reproduces the paper's reported numbers.
    PaperFaithful,
    // r is the true radius code; 1/G^2 prescale and z correction by G
    // happen internally, so (x, y, z) ~ r * (sin t cos p, sin t sin p, cos t).
    GainCorrected,
};

enum class Dims { TwoD, ThreeD };

// Two cascaded rotate2d stages:
//   stage 1: (a, b) = rotate2d(r', 0, theta)
//   stage 2: (x, y) = rotate2d(b, 0, phi); z = a
CartesianTriple spherical_to_cartesian(const SphericalInput& in, GainMode mode,
                                       const AtanLut& lut,
                                       const CordicConfig& cfg);

// Clock cycles: one per micro-rotation per stage.
int latency(Dims dims, const CordicConfig& cfg);

}  // namespace cordic
