// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dked/walk.hpp"

namespace dked {

// Config or trace input rejected; field() holds the dotted path of the
// offending key, e.g. "blocker.width_m".
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

std::string model_name(Model model);
Model model_from_string(const std::string& name);

std::string pattern_kind_name(PatternKind kind);

// Builds a scenario from a JSON config document. Every key is optional and
// falls back to the canonical 73.5 GHz setup; unknown keys are rejected.
WalkScenario parse_config(const std::string& json_text);

std::string write_config_json(const WalkScenario& scenario);

// CSV trace with the fixed header time_s,offset_m,loss_db,rel_power_db and
// six decimals per cell, one row per sample in time order.
void write_trace_csv(std::ostream& out, const ShadowTrace& trace);

struct TraceColumns {
    std::vector<double> time_s;
    std::vector<double> offset_m;
    std::vector<double> loss_db;
    std::vector<double> rel_power_db;
};

TraceColumns read_trace_csv(std::istream& in);

// Standalone SVG chart of rel_power_db over time.
void write_trace_svg(std::ostream& out, const ShadowTrace& trace);

}  // namespace dked
