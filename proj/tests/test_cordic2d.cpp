#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cordic/cordic2d.hpp"
#include "cordic/fixedpoint.hpp"

using namespace cordic;

namespace {
const CordicConfig kCfg{};  // defaults: N=16, F=8, guard=3, truncate
const AtanLut kLut = build_atan_lut(kCfg.n_iterations, kCfg.frac_bits);
}  // namespace

TEST_CASE("micro_rotation: 45-degree first step cancels z exactly") {
    CordicState s = make_state(MagCode{0x17B9}, MagCode{0},
                               degrees_to_angle_code(45.0), kCfg);
    s = micro_rotation(s, kLut, kCfg);
    CHECK(s.mag_x().raw == 0x17B9);
    CHECK(s.mag_y().raw == 0x17B9);
    CHECK(s.z == 0);  // LUT entry 0 is exactly the 45-degree code
    CHECK(s.i == 1);
}

TEST_CASE("micro_rotation: z = 0 tie rotates positive") {
    CordicState s = make_state(MagCode{1234}, MagCode{0}, AngleCode{0}, kCfg);
    s = micro_rotation(s, kLut, kCfg);
    CHECK(s.mag_y().raw == 1234);                      // d = +1 branch
    CHECK(s.ext_z().raw == -kLut.entries[0]);          // z' = -45 deg
    CHECK(to_angle_code(s.ext_z()).raw == -0x1000);
}

TEST_CASE("micro_rotation: 2-bit arithmetic shift step") {
    CordicState s = make_state(MagCode{0x1000}, MagCode{0x1000},
                               degrees_to_angle_code(-30.0), kCfg);
    s.i = 2;
    s = micro_rotation(s, kLut, kCfg);  // z < 0, d = -1
    CHECK(s.mag_x().raw == 0x1400);
    CHECK(s.mag_y().raw == 0x0C00);
}

TEST_CASE("micro_rotation: exhausted iteration index is a contract violation") {
    CordicState s = make_state(MagCode{0}, MagCode{0}, AngleCode{0}, kCfg);
    s.i = kLut.n_iterations;
    CHECK_THROWS_AS(micro_rotation(s, kLut, kCfg), std::logic_error);
}

TEST_CASE("rotate2d reproduces the table-4 anchor points") {
    const MagCode inv_g{0x17B9};
    SUBCASE("45 deg: both outputs near cos45 = 0x1B9F") {
        const auto r = rotate2d(inv_g, MagCode{0}, AngleCode{0x1000}, kLut, kCfg);
        CHECK(std::abs(r.x.raw - 0x1B9F) <= 2);
        CHECK(std::abs(r.y.raw - 0x1B9F) <= 2);
    }
    SUBCASE("90 deg") {
        const auto r = rotate2d(inv_g, MagCode{0}, AngleCode{0x2000}, kLut, kCfg);
        CHECK(std::abs(r.x.raw - 0x0000) <= 2);
        CHECK(std::abs(r.y.raw - 0x2710) <= 2);
    }
    SUBCASE("-30 deg (0xF555)") {
        const auto r = rotate2d(inv_g, MagCode{0},
                                AngleCode{static_cast<int16_t>(0xF555)}, kLut, kCfg);
        CHECK(std::abs(r.x.raw - 0x21D4) <= 3);
        CHECK(std::abs(r.y.raw - static_cast<int16_t>(0xEC78)) <= 3);
    }
}

TEST_CASE("sin_cos anchor points") {
    SUBCASE("60 deg") {
        const auto [c, s] = sin_cos(AngleCode{0x1555}, kLut, kCfg);
        CHECK(std::abs(c.raw - 0x1388) <= 3);
        CHECK(std::abs(s.raw - 0x21D4) <= 3);
    }
    SUBCASE("0 deg") {
        const auto [c, s] = sin_cos(AngleCode{0}, kLut, kCfg);
        CHECK(std::abs(c.raw - 10000) <= 2);
        CHECK(std::abs(s.raw) <= 2);
    }
    SUBCASE("-90 deg") {
        const auto [c, s] = sin_cos(AngleCode{static_cast<int16_t>(0xE000)}, kLut, kCfg);
        CHECK(std::abs(c.raw) <= 2);
        CHECK(std::abs(s.raw - (-10000)) <= 2);
    }
}

TEST_CASE("polar_to_cartesian") {
    SUBCASE("r = 1/G at 45 deg equals sin_cos(45)") {
        const auto [x, y] = polar_to_cartesian(MagCode{0x17B9}, AngleCode{0x1000},
                                               kLut, kCfg);
        const auto [c, s] = sin_cos(AngleCode{0x1000}, kLut, kCfg);
        CHECK(x == c);
        CHECK(y == s);
    }
    SUBCASE("zero vector is a fixed point") {
        const auto [x, y] = polar_to_cartesian(MagCode{0}, AngleCode{0x1555},
                                               kLut, kCfg);
        CHECK(x.raw == 0);
        CHECK(y.raw == 0);
    }
    SUBCASE("stage-1 value of the paper's 3-D example") {
        const auto [x, y] = polar_to_cartesian(MagCode{0x0E68}, AngleCode{0x1000},
                                               kLut, kCfg);
        CHECK(std::abs(x.raw - 0x10C6) <= 2);
        CHECK(std::abs(y.raw - 0x10C6) <= 2);
    }
}

TEST_CASE("convergence range enforcement") {
    const AngleCode too_big = degrees_to_angle_code(100.0);
    CHECK_THROWS_AS(rotate2d(MagCode{0x17B9}, MagCode{0}, too_big, kLut, kCfg),
                    std::domain_error);
    CordicConfig unchecked = kCfg;
    unchecked.range_check = false;
    CHECK_NOTHROW(rotate2d(MagCode{0x17B9}, MagCode{0}, too_big, kLut, unchecked));
    // 99.0 deg itself is inside the enforced bound
    CHECK_NOTHROW(rotate2d(MagCode{0x17B9}, MagCode{0},
                           degrees_to_angle_code(99.0), kLut, kCfg));
}

TEST_CASE("mismatched LUT/config is rejected") {
    const AtanLut small = build_atan_lut(8, kCfg.frac_bits);
    CHECK_THROWS_AS(rotate2d(MagCode{0x17B9}, MagCode{0}, AngleCode{0}, small, kCfg),
                    std::invalid_argument);
}

TEST_CASE("determinism: identical inputs give bit-identical outputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(-0x2000, 0x2000);
    for (int n = 0; n < 100; ++n) {
        const AngleCode a{static_cast<int16_t>(dist(rng))};
        const auto r1 = rotate2d(MagCode{0x17B9}, MagCode{0}, a, kLut, kCfg);
        const auto r2 = rotate2d(MagCode{0x17B9}, MagCode{0}, a, kLut, kCfg);
        REQUIRE(r1.x == r2.x);
        REQUIRE(r1.y == r2.y);
        REQUIRE(r1.z == r2.z);
    }
}

TEST_CASE("argument symmetry within 2 counts") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> dist(0, 0x2000);
    for (int n = 0; n < 500; ++n) {
        const auto code = static_cast<int16_t>(dist(rng));
        const auto [cp, sp] = sin_cos(AngleCode{code}, kLut, kCfg);
        const auto [cn, sn] = sin_cos(AngleCode{static_cast<int16_t>(-code)},
                                      kLut, kCfg);
        REQUIRE(std::abs(cp.raw - cn.raw) <= 2);
        REQUIRE(std::abs(sp.raw + sn.raw) <= 2);
    }
}

TEST_CASE("z residual stays inside the quantization bound") {
    // arctan(2^-(N-1)) in ExtAngle counts plus N counts of LUT rounding slack
    const double bound =
        std::atan(std::ldexp(1.0, -(kCfg.n_iterations - 1))) * 180.0 /
            std::numbers::pi / kDegreesPerCount * (1 << kCfg.frac_bits) +
        kCfg.n_iterations;
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> dist(-0x2000, 0x2000);
    for (int n = 0; n < 1000; ++n) {
        const AngleCode a{static_cast<int16_t>(dist(rng))};
        const auto r = rotate2d(MagCode{0x17B9}, MagCode{0}, a, kLut, kCfg);
        REQUIRE(std::abs(r.z.raw) <= bound);
    }
}

TEST_CASE("gain growth: floating mirror of the iteration scales by G exactly") {
    // Same micro-rotation recurrence in real arithmetic, no K factors:
    // each step multiplies |V| by sqrt(1 + 2^-2i) regardless of d.
    const double g16 = cordic_gain(16);
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> mag(-0.3, 0.3);
    std::uniform_real_distribution<double> ang(-99.0, 99.0);
    for (int n = 0; n < 1000; ++n) {
        double x = mag(rng), y = mag(rng), z = ang(rng);
        const double v0 = std::hypot(x, y);
        for (int i = 0; i < 16; ++i) {
            const double d = z >= 0 ? 1.0 : -1.0;
            const double t = std::ldexp(1.0, -i);
            const double xn = x - d * y * t;
            const double yn = y + d * x * t;
            z -= d * std::atan(t) * 180.0 / std::numbers::pi;
            x = xn;
            y = yn;
        }
        REQUIRE(std::hypot(x, y) ==
                doctest::Approx(g16 * v0).epsilon(1e-9));
    }
}

TEST_CASE("round-to-nearest shift mode tightens the error") {
    CordicConfig rounded = kCfg;
    rounded.shift_mode = ShiftMode::RoundToNearest;
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dist(-0x2000, 0x2000);
    for (int n = 0; n < 200; ++n) {
        const AngleCode a{static_cast<int16_t>(dist(rng))};
        const double deg = angle_code_to_degrees(a);
        const auto [c, s] = sin_cos(a, kLut, rounded);
        const auto tc = real_to_mag_code(std::cos(deg * std::numbers::pi / 180.0));
        const auto ts = real_to_mag_code(std::sin(deg * std::numbers::pi / 180.0));
        REQUIRE(std::abs(c.raw - tc.raw) <= 4);
        REQUIRE(std::abs(s.raw - ts.raw) <= 4);
    }
}
