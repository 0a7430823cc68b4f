// SPDX-License-Identifier: Apache-2.0

#include "dked/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <utility>

#include "json.hpp"

namespace dked {

namespace {

using json = nlohmann::ordered_json;

std::string join_path(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ConfigError(field, message);
}

void require_known_keys(const json& obj, const std::string& prefix,
                        std::initializer_list<const char*> known) {
    for (const auto& item : obj.items()) {
        bool recognized = false;
        for (const char* key : known) recognized = recognized || item.key() == key;
        if (!recognized) fail(join_path(prefix, item.key()), "unknown key");
    }
}

const json* find(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double read_number(const json& obj, const std::string& prefix, const char* key,
                   double fallback) {
    const json* value = find(obj, key);
    if (!value) return fallback;
    if (!value->is_number()) fail(join_path(prefix, key), "expected a number");
    return value->get<double>();
}

AntennaPattern parse_antenna(const json& root, const char* key) {
    const json* antenna = find(root, key);
    if (!antenna) return AntennaPattern::sinc_cos_deg(15.0);
    if (!antenna->is_object()) fail(key, "expected an object");
    require_known_keys(*antenna, key, {"kind", "hpbw_az_deg"});

    std::string kind = "sinc_cos";
    if (const json* k = find(*antenna, "kind")) {
        if (!k->is_string()) fail(join_path(key, "kind"), "expected a string");
        kind = k->get<std::string>();
    }
    if (kind == "isotropic") {
        if (find(*antenna, "hpbw_az_deg"))
            fail(join_path(key, "hpbw_az_deg"), "not applicable to an isotropic pattern");
        return AntennaPattern::isotropic();
    }
    if (kind != "sinc_cos") fail(join_path(key, "kind"), "unknown antenna kind '" + kind + "'");

    const double deg = read_number(*antenna, key, "hpbw_az_deg", 15.0);
    try {
        return AntennaPattern::sinc_cos_deg(deg);
    } catch (const std::invalid_argument& e) {
        fail(join_path(key, "hpbw_az_deg"), e.what());
    }
}

std::optional<HeightSpan> parse_height(const json& value) {
    if (value.is_string()) {
        if (value.get<std::string>() == "infinite") return std::nullopt;
        fail("blocker.height", "expected \"infinite\" or an object with bottom_m and top_m");
    }
    if (!value.is_object())
        fail("blocker.height", "expected \"infinite\" or an object with bottom_m and top_m");
    require_known_keys(value, "blocker.height", {"bottom_m", "top_m"});
    if (!find(value, "bottom_m") || !find(value, "top_m"))
        fail("blocker.height", "a height object needs both bottom_m and top_m");
    HeightSpan span;
    span.bottom_m = read_number(value, "blocker.height", "bottom_m", 0.0);
    span.top_m = read_number(value, "blocker.height", "top_m", 0.0);
    if (!(span.top_m > span.bottom_m)) fail("blocker.height.top_m", "must exceed bottom_m");
    return span;
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

void validate_parsed(const WalkScenario& sc) {
    if (!finite_positive(sc.link.carrier_hz))
        fail("carrier_hz", "must be a positive finite number");
    if (!finite_positive(sc.link.separation_m))
        fail("separation_m", "must be a positive finite number");
    if (!std::isfinite(sc.link.tx_height_m) || sc.link.tx_height_m < 0.0)
        fail("tx_height_m", "must be finite and >= 0");
    if (!std::isfinite(sc.link.rx_height_m) || sc.link.rx_height_m < 0.0)
        fail("rx_height_m", "must be finite and >= 0");
    if (!finite_positive(sc.blocker_width_m))
        fail("blocker.width_m", "must be a positive finite number");
    if (!(sc.distance_from_tx_m > 0.0) || !(sc.distance_from_tx_m < sc.link.separation_m))
        fail("blocker.distance_from_tx_m", "must lie strictly between TX and RX");
    if (sc.model == Model::Metis4Edge && !sc.blocker_height)
        fail("model", "metis_4edge needs a finite blocker height");
    if (sc.model == Model::Metis4Edge && sc.link.tx_height_m != sc.link.rx_height_m)
        fail("model", "metis_4edge requires equal tx_height_m and rx_height_m");
    if (!finite_positive(sc.speed_mps)) fail("walk.speed_mps", "must be a positive finite number");
    if (!finite_positive(sc.sample_interval_s))
        fail("walk.sample_interval_s", "must be a positive finite number");
    if (!std::isfinite(sc.start_offset_m) || !std::isfinite(sc.end_offset_m) ||
        !(sc.start_offset_m < sc.end_offset_m))
        fail("walk.start_offset_m", "must be less than end_offset_m");
}

json antenna_json(const AntennaPattern& pattern) {
    json out = json::object();
    out["kind"] = pattern_kind_name(pattern.kind());
    if (pattern.kind() == PatternKind::SincCos) out["hpbw_az_deg"] = pattern.hpbw_az_deg();
    return out;
}

// Cells that round to zero at six decimals are written as +0 so the file
// never shows "-0.000000".
double csv_cell(double x) { return std::abs(x) < 5e-7 ? 0.0 : x; }

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

std::string model_name(Model model) {
    switch (model) {
        case Model::Metis2Edge:
            return "metis_2edge";
        case Model::Metis4Edge:
            return "metis_4edge";
        case Model::ModifiedDirectional:
            return "modified_directional";
    }
    throw std::invalid_argument("unknown loss model");
}

Model model_from_string(const std::string& name) {
    if (name == "metis_2edge") return Model::Metis2Edge;
    if (name == "metis_4edge") return Model::Metis4Edge;
    if (name == "modified_directional") return Model::ModifiedDirectional;
    throw ConfigError("model", "unknown model '" + name + "'");
}

std::string pattern_kind_name(PatternKind kind) {
    return kind == PatternKind::Isotropic ? "isotropic" : "sinc_cos";
}

WalkScenario parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail("config", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) fail("config", "top-level value must be an object");
    require_known_keys(root, "",
                       {"carrier_hz", "separation_m", "tx_height_m", "rx_height_m",
                        "tx_antenna", "rx_antenna", "model", "blocker", "walk"});

    WalkScenario sc;
    sc.link.carrier_hz = read_number(root, "", "carrier_hz", sc.link.carrier_hz);
    sc.link.separation_m = read_number(root, "", "separation_m", sc.link.separation_m);
    sc.link.tx_height_m = read_number(root, "", "tx_height_m", sc.link.tx_height_m);
    sc.link.rx_height_m = read_number(root, "", "rx_height_m", sc.link.rx_height_m);

    sc.tx_pattern = parse_antenna(root, "tx_antenna");
    sc.rx_pattern = parse_antenna(root, "rx_antenna");

    if (const json* model = find(root, "model")) {
        if (!model->is_string()) fail("model", "expected a string");
        sc.model = model_from_string(model->get<std::string>());
    }

    if (const json* blocker = find(root, "blocker")) {
        if (!blocker->is_object()) fail("blocker", "expected an object");
        require_known_keys(*blocker, "blocker", {"width_m", "height", "distance_from_tx_m"});
        sc.blocker_width_m = read_number(*blocker, "blocker", "width_m", sc.blocker_width_m);
        sc.distance_from_tx_m =
            read_number(*blocker, "blocker", "distance_from_tx_m", sc.distance_from_tx_m);
        if (const json* height = find(*blocker, "height")) sc.blocker_height = parse_height(*height);
    }

    if (const json* walk = find(root, "walk")) {
        if (!walk->is_object()) fail("walk", "expected an object");
        require_known_keys(*walk, "walk",
                           {"speed_mps", "start_offset_m", "end_offset_m", "sample_interval_s"});
        sc.speed_mps = read_number(*walk, "walk", "speed_mps", sc.speed_mps);
        sc.start_offset_m = read_number(*walk, "walk", "start_offset_m", sc.start_offset_m);
        sc.end_offset_m = read_number(*walk, "walk", "end_offset_m", sc.end_offset_m);
        sc.sample_interval_s =
            read_number(*walk, "walk", "sample_interval_s", sc.sample_interval_s);
    }

    validate_parsed(sc);
    return sc;
}

std::string write_config_json(const WalkScenario& sc) {
    json root = json::object();
    root["carrier_hz"] = sc.link.carrier_hz;
    root["separation_m"] = sc.link.separation_m;
    root["tx_height_m"] = sc.link.tx_height_m;
    root["rx_height_m"] = sc.link.rx_height_m;
    root["tx_antenna"] = antenna_json(sc.tx_pattern);
    root["rx_antenna"] = antenna_json(sc.rx_pattern);
    root["model"] = model_name(sc.model);

    json blocker = json::object();
    blocker["width_m"] = sc.blocker_width_m;
    if (sc.blocker_height) {
        json height = json::object();
        height["bottom_m"] = sc.blocker_height->bottom_m;
        height["top_m"] = sc.blocker_height->top_m;
        blocker["height"] = height;
    } else {
        blocker["height"] = "infinite";
    }
    blocker["distance_from_tx_m"] = sc.distance_from_tx_m;
    root["blocker"] = blocker;

    json walk = json::object();
    walk["speed_mps"] = sc.speed_mps;
    walk["start_offset_m"] = sc.start_offset_m;
    walk["end_offset_m"] = sc.end_offset_m;
    walk["sample_interval_s"] = sc.sample_interval_s;
    root["walk"] = walk;

    return root.dump(2) + "\n";
}

void write_trace_csv(std::ostream& out, const ShadowTrace& trace) {
    out << "time_s,offset_m,loss_db,rel_power_db\n";
    char row[160];
    for (const TraceSample& s : trace.samples) {
        std::snprintf(row, sizeof row, "%.6f,%.6f,%.6f,%.6f\n", csv_cell(s.time_s),
                      csv_cell(s.offset_m), csv_cell(s.loss_db), csv_cell(s.rel_power_db));
        out << row;
    }
}

TraceColumns read_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("csv", "empty trace file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "time_s,offset_m,loss_db,rel_power_db")
        throw ConfigError("csv", "unexpected header '" + line + "'");

    TraceColumns cols;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double t = 0.0, y = 0.0, l = 0.0, p = 0.0;
        int consumed = 0;
        const int assigned =
            std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf%n", &t, &y, &l, &p, &consumed);
        if (assigned != 4 || consumed != static_cast<int>(line.size()))
            throw ConfigError("csv", "bad row " + std::to_string(row) + ": '" + line + "'");
        cols.time_s.push_back(t);
        cols.offset_m.push_back(y);
        cols.loss_db.push_back(l);
        cols.rel_power_db.push_back(p);
    }
    return cols;
}

void write_trace_svg(std::ostream& out, const ShadowTrace& trace) {
    if (trace.samples.empty()) throw std::invalid_argument("cannot chart an empty trace");

    constexpr double width = 880.0, height = 420.0;
    constexpr double ml = 64.0, mr = 18.0, mt = 18.0, mb = 46.0;
    constexpr double iw = width - ml - mr;
    constexpr double ih = height - mt - mb;

    const double t0 = trace.samples.front().time_s;
    const double t1 = trace.samples.back().time_s;
    const double tspan = t1 > t0 ? t1 - t0 : 1.0;
    double p_lo = trace.samples.front().rel_power_db;
    double p_hi = p_lo;
    for (const TraceSample& s : trace.samples) {
        p_lo = std::min(p_lo, s.rel_power_db);
        p_hi = std::max(p_hi, s.rel_power_db);
    }
    double pad = 0.05 * (p_hi - p_lo);
    if (pad <= 0.0) pad = 1.0;
    p_lo -= pad;
    p_hi += pad;

    const auto x_of = [&](double t) { return ml + iw * (t - t0) / tspan; };
    const auto y_of = [&](double p) { return mt + ih * (p_hi - p) / (p_hi - p_lo); };

    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"880\" height=\"420\" "
           "viewBox=\"0 0 880 420\" font-family=\"sans-serif\" font-size=\"12\">\n"
           "<rect width=\"880\" height=\"420\" fill=\"white\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double t = t0 + tspan * i / 5.0;
        const double x = x_of(t);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#dddddd\"/>\n"
                      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.2f</text>\n",
                      x, mt, x, mt + ih, x, mt + ih + 18.0, t);
        out << buf;
        const double p = p_lo + (p_hi - p_lo) * i / 5.0;
        const double y = y_of(p);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#dddddd\"/>\n"
                      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.1f</text>\n",
                      ml, y, ml + iw, y, ml - 6.0, y + 4.0, p);
        out << buf;
    }

    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
                  "stroke=\"#444444\"/>\n",
                  ml, mt, iw, ih);
    out << buf;

    out << "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\" points=\"";
    for (const TraceSample& s : trace.samples) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x_of(s.time_s), y_of(s.rel_power_db));
        out << buf;
    }
    out << "\"/>\n";

    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">time [s]</text>\n"
                  "<text transform=\"translate(14 %.2f) rotate(-90)\" "
                  "text-anchor=\"middle\">relative power [dB]</text>\n",
                  ml + iw / 2.0, height - 8.0, mt + ih / 2.0);
    out << buf;
    out << "</svg>\n";
}

}  // namespace dked
