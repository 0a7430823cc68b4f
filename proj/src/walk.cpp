// SPDX-License-Identifier: Apache-2.0

#include "dked/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace dked {

namespace {

ScreenBlocker screen_at(const WalkScenario& sc, double offset_m) {
    ScreenBlocker screen;
    screen.distance_from_tx_m = sc.distance_from_tx_m;
    screen.lateral_offset_m = offset_m;
    screen.width_m = sc.blocker_width_m;
    screen.height = sc.blocker_height;
    return screen;
}

}  // namespace

void validate_scenario(const WalkScenario& sc) {
    validate_link(sc.link);
    if (!std::isfinite(sc.start_offset_m) || !std::isfinite(sc.end_offset_m) ||
        !(sc.start_offset_m < sc.end_offset_m))
        throw std::invalid_argument("walk offsets must be finite with start < end");
    validate_screen(screen_at(sc, sc.start_offset_m), sc.link);
    if (sc.model == Model::Metis4Edge && !sc.blocker_height)
        throw std::invalid_argument("the four-edge model needs a finite screen height");
    if (sc.model == Model::Metis4Edge && sc.link.tx_height_m != sc.link.rx_height_m)
        throw std::invalid_argument("the four-edge model requires equal TX and RX heights");
    if (!std::isfinite(sc.speed_mps) || sc.speed_mps <= 0.0)
        throw std::invalid_argument("walk speed_mps must be a positive finite number");
    if (!std::isfinite(sc.sample_interval_s) || sc.sample_interval_s <= 0.0)
        throw std::invalid_argument("walk sample_interval_s must be a positive finite number");
}

ShadowTrace simulate_walk(const WalkScenario& sc) {
    validate_scenario(sc);
    const double span = sc.end_offset_m - sc.start_offset_m;
    const double step = sc.speed_mps * sc.sample_interval_s;
    // The slack keeps the count stable when span/step lands an ulp under a
    // whole number.
    const auto steps = static_cast<std::size_t>(std::floor(span / step + 1e-9));

    ShadowTrace trace;
    trace.scenario = sc;
    trace.samples.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        TraceSample s;
        s.time_s = static_cast<double>(i) * sc.sample_interval_s;
        s.offset_m = sc.start_offset_m + sc.speed_mps * s.time_s;
        const BlockageLoss loss = evaluate_screen_loss(
            sc.model, sc.link, screen_at(sc, s.offset_m), sc.tx_pattern, sc.rx_pattern);
        s.loss_db = loss.loss_db;
        s.rel_power_db = -loss.loss_db;
        trace.samples.push_back(s);
    }
    return trace;
}

EventStats event_stats(const ShadowTrace& trace, double threshold_db) {
    if (trace.samples.empty())
        throw std::invalid_argument("event stats need a non-empty trace");
    if (!std::isfinite(threshold_db) || threshold_db <= 0.0)
        throw std::invalid_argument("threshold_db must be a positive finite number");

    const auto& s = trace.samples;
    EventStats stats;
    stats.threshold_db = threshold_db;

    std::size_t arg_max = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].loss_db > s[arg_max].loss_db) arg_max = i;
    stats.max_loss_db = s[arg_max].loss_db;
    stats.time_of_max_s = s[arg_max].time_s;
    stats.no_event = stats.max_loss_db < threshold_db;

    if (!stats.no_event) {
        // Sum the time above threshold, interpolating the crossings
        // linearly inside the straddling intervals.
        double duration = 0.0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            const double a = s[i].loss_db;
            const double b = s[i + 1].loss_db;
            const double dt = s[i + 1].time_s - s[i].time_s;
            const bool in_a = a >= threshold_db;
            const bool in_b = b >= threshold_db;
            if (in_a && in_b)
                duration += dt;
            else if (in_a)
                duration += dt * (a - threshold_db) / (a - b);
            else if (in_b)
                duration += dt * (b - threshold_db) / (b - a);
        }
        stats.duration_s = duration;
    }

    const double half = trace.scenario.blocker_width_m / 2.0;
    const double lo = std::max(trace.scenario.start_offset_m, -half);
    const double hi = std::min(trace.scenario.end_offset_m, half);
    stats.blocked_window_s = std::max(0.0, hi - lo) / trace.scenario.speed_mps;
    return stats;
}

std::vector<WalkScenario> nine_measurement_presets(Model model) {
    std::vector<WalkScenario> presets;
    presets.reserve(9);
    for (int k = 1; k <= 9; ++k) {
        WalkScenario sc;
        sc.model = model;
        sc.distance_from_tx_m = 0.5 * k;
        presets.push_back(sc);
    }
    return presets;
}

}  // namespace dked
