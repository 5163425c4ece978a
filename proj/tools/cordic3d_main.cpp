// Command-line surface for the 3-D CORDIC golden model: coordinate
// conversion, LUT dump, error-report tables, exhaustive sweep, and
// HDL-style test-vector emission.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cordic/oracle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
    int iterations = 16;
    int frac_bits = 8;
    int guard_bits = 3;
    std::string shift = "truncate";
    std::string mode = "paper-faithful";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_mode = true) {
    cmd->add_option("--iterations", opts.iterations, "micro-rotation count")
        ->check(CLI::Range(1, 32));
    cmd->add_option("--frac-bits", opts.frac_bits, "z fractional extension bits")
        ->check(CLI::Range(0, 12));
    cmd->add_option("--guard-bits", opts.guard_bits, "x/y guard fraction bits")
        ->check(CLI::Range(0, 8));
    cmd->add_option("--shift", opts.shift, "datapath shift rounding")
        ->check(CLI::IsMember({"truncate", "round"}));
    if (with_mode) {
        cmd->add_option("--mode", opts.mode, "gain handling")
            ->check(CLI::IsMember({"paper-faithful", "gain-corrected"}));
    }
}

cordic::CordicConfig make_config(const CommonOpts& opts) {
    cordic::CordicConfig cfg;
    cfg.n_iterations = opts.iterations;
    cfg.frac_bits = opts.frac_bits;
    cfg.guard_bits = opts.guard_bits;
    cfg.shift_mode = opts.shift == "round" ? cordic::ShiftMode::RoundToNearest
                                           : cordic::ShiftMode::TruncateArithmetic;
    return cfg;
}

cordic::GainMode make_mode(const CommonOpts& opts) {
    return opts.mode == "gain-corrected" ? cordic::GainMode::GainCorrected
                                         : cordic::GainMode::PaperFaithful;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    return out;
}

void write_report_csv(std::ostream& out, const cordic::ErrorReport& report,
                      const std::vector<std::string>& input_names,
                      const std::vector<std::string>& channel_names) {
    for (const auto& n : input_names) out << n << ",";
    for (size_t k = 0; k < channel_names.size(); ++k) {
        const auto& n = channel_names[k];
        out << n << "_theoretical," << n << "_simulated," << n << "_deviation";
        out << (k + 1 < channel_names.size() ? "," : "\n");
    }
    for (const auto& row : report.rows) {
        if (!row.in_range) {
            for (size_t k = 0; k < row.inputs.size(); ++k) {
                out << cordic::to_hex(row.inputs[k]) << ",";
            }
            out << "out-of-range\n";
            continue;
        }
        for (int16_t v : row.inputs) out << cordic::to_hex(v) << ",";
        for (size_t k = 0; k < channel_names.size(); ++k) {
            out << cordic::to_hex(row.theoretical[k]) << ","
                << cordic::to_hex(row.simulated[k]) << "," << row.deviation[k];
            out << (k + 1 < channel_names.size() ? "," : "\n");
        }
    }
}

void print_averages(const cordic::ErrorReport& report,
                    const std::vector<std::string>& channel_names) {
    if (!report.has_averages) {
        std::cout << "no in-range rows, averages undefined\n";
        return;
    }
    std::cout << "rows=" << report.rows.size();
    for (size_t k = 0; k < channel_names.size(); ++k) {
        std::cout << " avg_" << channel_names[k] << "=" << report.averages[k];
    }
    std::cout << " max=" << report.max_deviation() << " counts\n";
}

int run(int argc, char** argv) {
    CLI::App app{"3-D CORDIC spherical-to-Cartesian golden model"};
    app.require_subcommand(1);

    // --- convert ---
    auto* convert = app.add_subcommand(
        "convert", "convert one (r, theta, phi) input to Cartesian hex");
    CommonOpts conv_opts;
    std::string r_hex, theta_hex, phi_hex;
    std::optional<double> r_real, theta_deg, phi_deg;
    convert->add_option("--r", r_hex, "radius as MagCode hex (e.g. 0E68)");
    convert->add_option("--theta", theta_hex, "inclination as AngleCode hex");
    convert->add_option("--phi", phi_hex, "azimuth as AngleCode hex");
    convert->add_option("--r-real", r_real, "radius in units");
    convert->add_option("--theta-deg", theta_deg, "inclination in degrees");
    convert->add_option("--phi-deg", phi_deg, "azimuth in degrees");
    add_common(convert, conv_opts);
    convert->callback([&] {
        cordic::SphericalInput in;
        if (!r_hex.empty()) in.r = cordic::MagCode{cordic::parse_hex(r_hex)};
        else if (r_real) in.r = cordic::real_to_mag_code(*r_real);
        else throw CLI::ValidationError("convert", "--r or --r-real is required");
        if (!theta_hex.empty()) in.theta = cordic::AngleCode{cordic::parse_hex(theta_hex)};
        else if (theta_deg) in.theta = cordic::degrees_to_angle_code(*theta_deg);
        else throw CLI::ValidationError("convert", "--theta or --theta-deg is required");
        if (!phi_hex.empty()) in.phi = cordic::AngleCode{cordic::parse_hex(phi_hex)};
        else if (phi_deg) in.phi = cordic::degrees_to_angle_code(*phi_deg);
        else throw CLI::ValidationError("convert", "--phi or --phi-deg is required");

        const auto cfg = make_config(conv_opts);
        const auto lut = cordic::build_atan_lut(cfg.n_iterations, cfg.frac_bits);
        const auto out = cordic::spherical_to_cartesian(in, make_mode(conv_opts), lut, cfg);
        std::cout << "X=" << cordic::to_hex(out.x.raw)
                  << " Y=" << cordic::to_hex(out.y.raw)
                  << " Z=" << cordic::to_hex(out.z.raw) << "\n";
        std::cout << "x=" << cordic::mag_code_to_real(out.x)
                  << " y=" << cordic::mag_code_to_real(out.y)
                  << " z=" << cordic::mag_code_to_real(out.z) << "\n";
    });

    // --- report ---
    auto* report = app.add_subcommand(
        "report", "reproduce the accuracy tables (table4 | table5 | grid)");
    CommonOpts rep_opts;
    std::string which;
    std::string csv_path;
    int grid_step = 5;
    report->add_option("which", which, "table4, table5 or grid")
        ->required()
        ->check(CLI::IsMember({"table4", "table5", "grid"}));
    report->add_option("--csv", csv_path, "write rows as CSV to this path");
    report->add_option("--step", grid_step, "grid step in degrees")
        ->check(CLI::Range(1, 45));
    add_common(report, rep_opts);
    report->callback([&] {
        const auto cfg = make_config(rep_opts);
        const auto lut = cordic::build_atan_lut(cfg.n_iterations, cfg.frac_bits);
        if (which == "table4") {
            const std::vector<double> angles{90, 75, 60, 45, 30, 15,
                                             -15, -30, -45, -60, -75, -90};
            const auto rep = cordic::report_2d(angles, lut, cfg);
            if (!csv_path.empty()) {
                auto out = open_out(csv_path);
                write_report_csv(out, rep, {"z"}, {"cos", "sin"});
            }
            print_averages(rep, {"cos", "sin"});
            return;
        }
        const auto gc = cordic::gain_constants(cfg.n_iterations);
        std::vector<cordic::Case3d> cases;
        if (which == "table5") {
            cases = {{gc.inv_gain_sq_code, 45.0, 45.0},
                     {gc.inv_gain_sq_code, 60.0, 30.0}};
        } else {
            for (int t = 5; t <= 85; t += grid_step)
                for (int p = 5; p <= 85; p += grid_step)
                    cases.push_back({gc.inv_gain_sq_code, double(t), double(p)});
        }
        const auto rep = cordic::report_3d(cases, make_mode(rep_opts), lut, cfg);
        if (!csv_path.empty()) {
            auto out = open_out(csv_path);
            write_report_csv(out, rep, {"r", "theta", "phi"}, {"x", "y", "z"});
        }
        print_averages(rep, {"x", "y", "z"});
    });

    // --- vectors ---
    auto* vectors = app.add_subcommand(
        "vectors", "emit HDL testbench stimulus/expected vectors");
    CommonOpts vec_opts;
    int count = 1;
    uint32_t seed = 0;
    std::string out_path;
    vectors->add_option("--count", count, "number of vectors")->check(CLI::Range(1, 1000000));
    vectors->add_option("--seed", seed, "RNG seed");
    vectors->add_option("--out", out_path, "output file")->required();
    add_common(vectors, vec_opts);
    vectors->callback([&] {
        const auto cfg = make_config(vec_opts);
        const auto mode = make_mode(vec_opts);
        const auto lut = cordic::build_atan_lut(cfg.n_iterations, cfg.frac_bits);
        const auto gc = cordic::gain_constants(cfg.n_iterations);
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> r_dist(0, gc.inv_gain_sq_code.raw);
        std::uniform_int_distribution<int> a_dist(-0x2000, 0x2000);
        auto out = open_out(out_path);
        out << "# cordic3d test vectors: mode=" << vec_opts.mode
            << " iterations=" << cfg.n_iterations << " frac_bits=" << cfg.frac_bits
            << " guard_bits=" << cfg.guard_bits << " shift=" << vec_opts.shift
            << " seed=" << seed << " count=" << count << "\n";
        out << "# r theta phi x y z\n";
        for (int n = 0; n < count; ++n) {
            cordic::SphericalInput in{
                cordic::MagCode{static_cast<int16_t>(r_dist(rng))},
                cordic::AngleCode{static_cast<int16_t>(a_dist(rng))},
                cordic::AngleCode{static_cast<int16_t>(a_dist(rng))}};
            const auto res = cordic::spherical_to_cartesian(in, mode, lut, cfg);
            out << cordic::to_hex(in.r.raw) << " " << cordic::to_hex(in.theta.raw)
                << " " << cordic::to_hex(in.phi.raw) << " "
                << cordic::to_hex(res.x.raw) << " " << cordic::to_hex(res.y.raw)
                << " " << cordic::to_hex(res.z.raw) << "\n";
        }
        std::cout << "wrote " << count << " vectors to " << out_path << "\n";
    });

    // --- lut ---
    auto* lut_cmd = app.add_subcommand("lut", "dump the arctan lookup table as CSV");
    int lut_iterations = 16;
    int lut_frac_bits = 8;
    std::string lut_csv;
    lut_cmd->add_option("--iterations", lut_iterations)->check(CLI::Range(1, 32));
    lut_cmd->add_option("--frac-bits", lut_frac_bits)->check(CLI::Range(0, 12));
    lut_cmd->add_option("--csv", lut_csv, "write to file instead of stdout");
    lut_cmd->callback([&] {
        const auto lut = cordic::build_atan_lut(lut_iterations, lut_frac_bits);
        std::ostringstream body;
        body << "i,tan,degrees,raw_hex\n";
        for (int i = 0; i < lut.n_iterations; ++i) {
            const double tan_val = std::ldexp(1.0, -i);
            const double deg = std::atan(tan_val) * 180.0 / std::numbers::pi;
            const int32_t raw = lut.entries[static_cast<size_t>(i)];
            std::ostringstream hex;
            hex << std::uppercase << std::hex << raw;
            body << i << "," << tan_val << "," << deg << "," << hex.str() << "\n";
        }
        if (!lut_csv.empty()) open_out(lut_csv) << body.str();
        else std::cout << body.str();
    });

    // --- sweep ---
    auto* sweep = app.add_subcommand(
        "sweep", "exhaustive sin/cos sweep over [-0x2000, 0x2000] vs oracle");
    CommonOpts sweep_opts;
    add_common(sweep, sweep_opts, /*with_mode=*/false);
    sweep->callback([&] {
        const auto cfg = make_config(sweep_opts);
        const auto lut = cordic::build_atan_lut(cfg.n_iterations, cfg.frac_bits);
        int max_dev = 0;
        int64_t sum_dev = 0;
        int64_t n = 0;
        for (int code = -0x2000; code <= 0x2000; ++code) {
            const cordic::AngleCode a{static_cast<int16_t>(code)};
            const double deg = cordic::angle_code_to_degrees(a);
            const auto ref = cordic::polar_oracle(1.0, deg);
            const auto tc = cordic::real_to_mag_code(ref.x);
            const auto ts = cordic::real_to_mag_code(ref.y);
            const auto [sc, ss] = cordic::sin_cos(a, lut, cfg);
            const int dc = std::abs(tc.raw - sc.raw);
            const int ds = std::abs(ts.raw - ss.raw);
            max_dev = std::max({max_dev, dc, ds});
            sum_dev += dc + ds;
            n += 2;
        }
        std::cout << "cases=" << n / 2 << " max=" << max_dev
                  << " mean=" << static_cast<double>(sum_dev) / static_cast<double>(n)
                  << " counts\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
