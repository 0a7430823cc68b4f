// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "dked/scenario_io.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write " + path);
}

dked::ScreenBlocker scenario_screen(const dked::WalkScenario& sc, double offset_m) {
    dked::ScreenBlocker screen;
    screen.distance_from_tx_m = sc.distance_from_tx_m;
    screen.lateral_offset_m = offset_m;
    screen.width_m = sc.blocker_width_m;
    screen.height = sc.blocker_height;
    return screen;
}

void cmd_simulate(const std::string& config_path, const std::string& out_path,
                  const std::string& svg_path) {
    const dked::WalkScenario sc = dked::parse_config(read_file(config_path));
    const dked::ShadowTrace trace = dked::simulate_walk(sc);
    std::ostringstream csv;
    dked::write_trace_csv(csv, trace);
    write_file(out_path, csv.str());
    if (!svg_path.empty()) {
        std::ostringstream svg;
        dked::write_trace_svg(svg, trace);
        write_file(svg_path, svg.str());
    }
}

void cmd_loss(const std::string& config_path, double offset_m) {
    const dked::WalkScenario sc = dked::parse_config(read_file(config_path));
    const dked::BlockageLoss loss =
        dked::evaluate_screen_loss(sc.model, sc.link, scenario_screen(sc, offset_m),
                                   sc.tx_pattern, sc.rx_pattern);
    std::printf("loss_db=%.4f\n", loss.loss_db);
}

void cmd_preset_nine(const std::string& outdir, const std::string& model_name) {
    const dked::Model model = dked::model_from_string(model_name);
    const std::vector<dked::WalkScenario> presets = dked::nine_measurement_presets(model);
    for (const dked::WalkScenario& sc : presets) dked::validate_scenario(sc);

    std::error_code ec;
    std::filesystem::create_directories(outdir, ec);
    if (ec) throw IoError("cannot create " + outdir + ": " + ec.message());
    int k = 0;
    for (const dked::WalkScenario& sc : presets) {
        ++k;
        const std::string stem = outdir + "/meas_" + std::to_string(k);
        write_file(stem + ".json", dked::write_config_json(sc));
        std::ostringstream csv;
        dked::write_trace_csv(csv, dked::simulate_walk(sc));
        write_file(stem + ".csv", csv.str());
    }
}

void cmd_pattern(double hpbw_deg, double step_deg) {
    if (!std::isfinite(step_deg) || step_deg <= 0.0 || step_deg > 180.0)
        throw std::invalid_argument("--step-deg must lie in (0, 180]");
    const dked::AntennaPattern pattern = dked::AntennaPattern::sinc_cos_deg(hpbw_deg);
    constexpr double half_pi = std::numbers::pi / 2.0;
    const int steps = static_cast<int>(std::floor(180.0 / step_deg + 1e-9));
    std::printf("theta_deg,gain\n");
    for (int i = 0; i <= steps; ++i) {
        const double theta_deg = -90.0 + i * step_deg;
        const double theta_rad =
            std::clamp(theta_deg * std::numbers::pi / 180.0, -half_pi, half_pi);
        std::printf("%.4f,%.9f\n", theta_deg, pattern.normalized_gain(theta_rad));
    }
}

void cmd_compare(const std::string& path_a, const std::string& path_b) {
    std::ifstream a(path_a, std::ios::binary), b(path_b, std::ios::binary);
    if (!a) throw IoError("cannot open " + path_a);
    if (!b) throw IoError("cannot open " + path_b);
    const dked::TraceColumns ca = dked::read_trace_csv(a);
    const dked::TraceColumns cb = dked::read_trace_csv(b);
    if (ca.time_s.size() != cb.time_s.size())
        throw dked::ConfigError("csv", "trace lengths differ");
    for (std::size_t i = 0; i < ca.time_s.size(); ++i)
        if (ca.time_s[i] != cb.time_s[i]) throw dked::ConfigError("csv", "time grids differ");

    double max_diff = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < ca.loss_db.size(); ++i) {
        const double d = std::abs(ca.loss_db[i] - cb.loss_db[i]);
        max_diff = std::max(max_diff, d);
        sum += d;
    }
    const double mean = ca.loss_db.empty() ? 0.0 : sum / static_cast<double>(ca.loss_db.size());
    std::printf("max_abs_diff_db=%.6f\nmean_abs_diff_db=%.6f\n", max_diff, mean);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Screen shadowing for point-to-point links: loss models, horn patterns, walk traces"};
    app.require_subcommand(1);

    std::string config_path, out_path, svg_path;
    double offset_m = 0.0;
    std::string outdir, model = "modified_directional";
    double hpbw_deg = 0.0, step_deg = 1.0;
    std::string trace_a, trace_b;

    CLI::App* sim = app.add_subcommand("simulate", "Run a walk scenario and write the CSV trace");
    sim->add_option("--config", config_path, "scenario config (JSON)")->required();
    sim->add_option("--out", out_path, "output CSV path")->required();
    sim->add_option("--svg", svg_path, "also write an SVG chart");

    CLI::App* loss = app.add_subcommand("loss", "Print the loss for one blocker position");
    loss->add_option("--config", config_path, "scenario config (JSON)")->required();
    loss->add_option("--offset", offset_m, "blocker center offset in meters")->required();

    CLI::App* nine =
        app.add_subcommand("preset-nine", "Write configs and traces for the nine canonical crossings");
    nine->add_option("--outdir", outdir, "output directory")->required();
    nine->add_option("--model", model, "loss model for all nine runs");

    CLI::App* pat = app.add_subcommand("pattern", "Dump the normalized gain over [-90, 90] degrees");
    pat->add_option("--hpbw-deg", hpbw_deg, "half-power beamwidth in degrees")->required();
    pat->add_option("--step-deg", step_deg, "table step in degrees");

    CLI::App* cmp = app.add_subcommand("compare", "Compare the loss columns of two traces on one grid");
    cmp->add_option("trace_a", trace_a, "first CSV trace")->required();
    cmp->add_option("trace_b", trace_b, "second CSV trace")->required();

    try {
        app.parse(argc, argv);
        if (sim->parsed())
            cmd_simulate(config_path, out_path, svg_path);
        else if (loss->parsed())
            cmd_loss(config_path, offset_m);
        else if (nine->parsed())
            cmd_preset_nine(outdir, model);
        else if (pat->parsed())
            cmd_pattern(hpbw_deg, step_deg);
        else if (cmp->parsed())
            cmd_compare(trace_a, trace_b);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dked::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
