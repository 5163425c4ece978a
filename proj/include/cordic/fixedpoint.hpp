#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cordic {

// Angle format: 16-bit two's complement, 1 count = 720/2^16 degrees.
// 90 deg = 0x2000, full range [-360, +360) deg.
struct AngleCode {
    int16_t raw = 0;
    friend bool operator==(AngleCode, AngleCode) = default;
};

// Magnitude format: 16-bit two's complement, 1 count = 1e-4 units.
// 0.5 = 0x1388, range [-3.2768, +3.2767].
struct MagCode {
    int16_t raw = 0;
    friend bool operator==(MagCode, MagCode) = default;
};

// Internal angle accumulator: AngleCode scaled by 2^frac_bits extra
// fractional bits. Dropping the low frac_bits recovers the AngleCode.
struct ExtAngle {
    int32_t raw = 0;
    int frac_bits = 0;
    friend bool operator==(ExtAngle, ExtAngle) = default;
};

inline constexpr double kDegreesPerCount = 720.0 / 65536.0;
inline constexpr double kUnitsPerMagCount = 1e-4;

// floor(x + 0.5) -- the rounding rule used for all magnitude quantization.
int64_t round_half_up(double x);

// floor rule; throws std::out_of_range unless -360 <= deg < 360.
AngleCode degrees_to_angle_code(double deg);
double angle_code_to_degrees(AngleCode a);

// round-half-up at 1e-4; throws std::out_of_range if |v| > 3.2767-ish
// (i.e. the rounded count does not fit 16 bits).
MagCode real_to_mag_code(double v);
double mag_code_to_real(MagCode m);

ExtAngle to_ext_angle(AngleCode a, int frac_bits);
AngleCode to_angle_code(ExtAngle e);  // truncates the low frac_bits
double ext_angle_to_degrees(ExtAngle e);

// 4-digit uppercase two's-complement hex, no prefix: -1366 <-> "FAAA".
std::string to_hex(int16_t raw);
int16_t parse_hex(std::string_view s);  // throws std::invalid_argument

}  // namespace cordic
