#include "cordic/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace cordic {

namespace {

double rad(double deg) { return deg * std::numbers::pi / 180.0; }

void finish(ErrorReport& report, size_t channels) {
    report.averages.assign(channels, 0.0);
    size_t used = 0;
    for (const ErrorRow& row : report.rows) {
        if (!row.in_range) continue;
        for (size_t k = 0; k < channels; ++k) {
            report.averages[k] += row.deviation[k];
        }
        ++used;
    }
    if (used == 0) {
        report.averages.clear();
        report.has_averages = false;
        return;
    }
    for (double& a : report.averages) a /= static_cast<double>(used);
    report.has_averages = true;
}

}  // namespace

Vec3 spherical_oracle(double r, double theta_deg, double phi_deg) {
    const double st = std::sin(rad(theta_deg));
    return Vec3{r * st * std::cos(rad(phi_deg)),
                r * st * std::sin(rad(phi_deg)),
                r * std::cos(rad(theta_deg))};
}

Vec2 polar_oracle(double r, double theta_deg) {
    return Vec2{r * std::cos(rad(theta_deg)), r * std::sin(rad(theta_deg))};
}

int ErrorReport::max_deviation() const {
    int m = 0;
    for (const ErrorRow& row : rows) {
        if (!row.in_range) continue;
        for (int d : row.deviation) m = std::max(m, d);
    }
    return m;
}

ErrorReport report_2d(const std::vector<double>& angles_deg, const AtanLut& lut,
                      const CordicConfig& cfg) {
    ErrorReport report;
    report.rows.reserve(angles_deg.size());
    for (double deg : angles_deg) {
        ErrorRow row;
        try {
            const AngleCode code = degrees_to_angle_code(deg);
            row.inputs = {code.raw};
            const Vec2 ref = polar_oracle(1.0, deg);
            const MagCode tc = real_to_mag_code(ref.x);
            const MagCode ts = real_to_mag_code(ref.y);
            const auto [sc, ss] = sin_cos(code, lut, cfg);
            row.theoretical = {tc.raw, ts.raw};
            row.simulated = {sc.raw, ss.raw};
            row.deviation = {std::abs(tc.raw - sc.raw), std::abs(ts.raw - ss.raw)};
        } catch (const std::out_of_range&) {
            row.in_range = false;
        } catch (const std::domain_error&) {
            row.in_range = false;
        }
        report.rows.push_back(std::move(row));
    }
    finish(report, 2);
    return report;
}

ErrorReport report_3d(const std::vector<Case3d>& cases, GainMode mode,
                      const AtanLut& lut, const CordicConfig& cfg) {
    const GainConstants gc = gain_constants(cfg.n_iterations);
    ErrorReport report;
    report.rows.reserve(cases.size());
    for (const Case3d& c : cases) {
        ErrorRow row;
        try {
            const SphericalInput in{c.r, degrees_to_angle_code(c.theta_deg),
                                    degrees_to_angle_code(c.phi_deg)};
            row.inputs = {in.r.raw, in.theta.raw, in.phi.raw};
            const double rr = mag_code_to_real(c.r);
            Vec3 ref = spherical_oracle(rr, c.theta_deg, c.phi_deg);
            if (mode == GainMode::PaperFaithful) {
                ref.x *= gc.gain * gc.gain;
                ref.y *= gc.gain * gc.gain;
                ref.z *= gc.gain;
            }
            const MagCode tx = real_to_mag_code(ref.x);
            const MagCode ty = real_to_mag_code(ref.y);
            const MagCode tz = real_to_mag_code(ref.z);
            const CartesianTriple sim = spherical_to_cartesian(in, mode, lut, cfg);
            row.theoretical = {tx.raw, ty.raw, tz.raw};
            row.simulated = {sim.x.raw, sim.y.raw, sim.z.raw};
            row.deviation = {std::abs(tx.raw - sim.x.raw),
                             std::abs(ty.raw - sim.y.raw),
                             std::abs(tz.raw - sim.z.raw)};
        } catch (const std::out_of_range&) {
            row.in_range = false;
        } catch (const std::domain_error&) {
            row.in_range = false;
        }
        report.rows.push_back(std::move(row));
    }
    finish(report, 3);
    return report;
}

}  // namespace cordic
