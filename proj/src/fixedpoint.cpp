#include "cordic/fixedpoint.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cordic {

int64_t round_half_up(double x) {
    return static_cast<int64_t>(std::floor(x + 0.5));
}

AngleCode degrees_to_angle_code(double deg) {
    if (!(deg >= -360.0 && deg < 360.0)) {
        throw std::out_of_range("angle " + std::to_string(deg) +
                                " deg outside [-360, 360)");
    }
    // deg * 65536 is exact in binary; the single divide keeps exact
    // multiples of the count size landing on integers before floor.
    const double counts = (deg * 65536.0) / 720.0;
    return AngleCode{static_cast<int16_t>(std::floor(counts))};
}

double angle_code_to_degrees(AngleCode a) {
    return (static_cast<double>(a.raw) * 720.0) / 65536.0;
}

MagCode real_to_mag_code(double v) {
    const int64_t counts = round_half_up(v * 1e4);
    if (counts < INT16_MIN || counts > INT16_MAX) {
        throw std::out_of_range("magnitude " + std::to_string(v) +
                                " outside 16-bit range [-3.2768, 3.2767]");
    }
    return MagCode{static_cast<int16_t>(counts)};
}

double mag_code_to_real(MagCode m) {
    return static_cast<double>(m.raw) * kUnitsPerMagCount;
}

ExtAngle to_ext_angle(AngleCode a, int frac_bits) {
    return ExtAngle{static_cast<int32_t>(a.raw) << frac_bits, frac_bits};
}

AngleCode to_angle_code(ExtAngle e) {
    return AngleCode{static_cast<int16_t>(e.raw >> e.frac_bits)};
}

double ext_angle_to_degrees(ExtAngle e) {
    return static_cast<double>(e.raw) * kDegreesPerCount /
           static_cast<double>(int32_t{1} << e.frac_bits);
}

std::string to_hex(int16_t raw) {
    static const char* digits = "0123456789ABCDEF";
    const auto u = static_cast<uint16_t>(raw);
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) {
        s[3 - i] = digits[(u >> (4 * i)) & 0xF];
    }
    return s;
}

int16_t parse_hex(std::string_view s) {
    if (s.empty() || s.size() > 4) {
        throw std::invalid_argument("hex field '" + std::string(s) +
                                    "' must be 1-4 hex digits");
    }
    uint16_t u = 0;
    for (char c : s) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else {
            throw std::invalid_argument("invalid hex digit '" +
                                        std::string(1, c) + "'");
        }
        u = static_cast<uint16_t>((u << 4) | v);
    }
    return static_cast<int16_t>(u);
}

}  // namespace cordic
