// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "dked/models.hpp"

namespace dked {

// One sample of a shadowing trace. rel_power_db is the received power
// relative to the unblocked link, i.e. -loss_db.
struct TraceSample {
    double time_s = 0.0;
    double offset_m = 0.0;
    double loss_db = 0.0;
    double rel_power_db = 0.0;
};

// A blocker crossing the link on a straight lateral path at constant
// speed. The screen center moves from start_offset_m to end_offset_m;
// offset zero is the boresight crossing. t = 0 is the start offset.
struct WalkScenario {
    LinkGeometry link;
    Model model = Model::ModifiedDirectional;
    AntennaPattern tx_pattern = AntennaPattern::sinc_cos_deg(15.0);
    AntennaPattern rx_pattern = AntennaPattern::sinc_cos_deg(15.0);
    double blocker_width_m = 0.28;
    std::optional<HeightSpan> blocker_height;
    double distance_from_tx_m = 2.5;
    double speed_mps = 1.0;
    double start_offset_m = -1.0;
    double end_offset_m = 1.0;
    double sample_interval_s = 0.002;
};

struct ShadowTrace {
    WalkScenario scenario;
    std::vector<TraceSample> samples;
};

// Shadowing event extracted from a trace at a given dB threshold.
struct EventStats {
    double max_loss_db = 0.0;
    double time_of_max_s = 0.0;
    double threshold_db = 0.0;
    double duration_s = 0.0;        // time above threshold, edge-interpolated
    bool no_event = true;           // no sample reached the threshold
    double blocked_window_s = 0.0;  // time the direct ray spends inside the screen
};

void validate_scenario(const WalkScenario& scenario);

// Samples the loss every sample_interval_s from the start offset to the
// last grid point at or before the end offset, both ends included.
ShadowTrace simulate_walk(const WalkScenario& scenario);

EventStats event_stats(const ShadowTrace& trace, double threshold_db);

// The nine canonical crossings: screen distances 0.5 m to 4.5 m from the
// TX in 0.5 m steps, everything else at the scenario defaults.
std::vector<WalkScenario> nine_measurement_presets(Model model = Model::ModifiedDirectional);

}  // namespace dked
