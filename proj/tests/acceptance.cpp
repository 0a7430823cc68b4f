// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dked/antenna.hpp"
#include "dked/geometry.hpp"
#include "dked/models.hpp"
#include "dked/walk.hpp"

namespace fs = std::filesystem;
using namespace dked;

namespace {

int failures = 0;

void report(int id, const char* summary, bool ok) {
    std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", id, summary);
    if (!ok)
        ++failures;
}

struct RandomCase {
    LinkGeometry link;
    ScreenBlocker screen;
};

std::vector<RandomCase> random_cases(int n) {
    std::mt19937 rng(900715);
    std::uniform_real_distribution<double> sep(1.0, 50.0);
    std::uniform_real_distribution<double> frac(0.02, 0.98);
    std::uniform_real_distribution<double> off(-2.0, 2.0);
    std::uniform_real_distribution<double> width(0.05, 1.0);
    std::uniform_real_distribution<double> freq(6e9, 100e9);
    std::vector<RandomCase> cases;
    cases.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        RandomCase c;
        c.link.separation_m = sep(rng);
        c.link.carrier_hz = freq(rng);
        c.screen.distance_from_tx_m = frac(rng) * c.link.separation_m;
        c.screen.lateral_offset_m = off(rng);
        c.screen.width_m = width(rng);
        cases.push_back(c);
    }
    return cases;
}

ScreenBlocker default_screen(double distance_from_tx_m) {
    ScreenBlocker screen;
    screen.distance_from_tx_m = distance_from_tx_m;
    return screen;
}

bool run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return in.good() || in.eof() ? buf.str() : std::string();
}

void criterion_1(const std::vector<RandomCase>& cases) {
    const AntennaPattern iso = AntennaPattern::isotropic();
    bool ok = true;
    for (const RandomCase& c : cases) {
        const double two_edge = screen_loss_2edge(c.link, c.screen).loss_db;
        const double modified = modified_screen_loss(c.link, c.screen, iso, iso).loss_db;
        ok = ok && std::abs(modified - two_edge) <= 1e-9;
    }
    report(1, "isotropic directional model matches the two-edge model", ok);
}

void criterion_2() {
    bool ok = true;
    for (Model model : {Model::Metis2Edge, Model::ModifiedDirectional, Model::Metis4Edge}) {
        std::vector<WalkScenario> presets = nine_measurement_presets(model);
        if (model == Model::Metis4Edge)
            for (WalkScenario& sc : presets)
                sc.blocker_height = HeightSpan{0.0, 1.8};
        for (int k = 0; k <= 3; ++k) {
            const ShadowTrace a = simulate_walk(presets[static_cast<std::size_t>(k)]);
            const ShadowTrace b = simulate_walk(presets[static_cast<std::size_t>(8 - k)]);
            ok = ok && a.samples.size() == b.samples.size();
            for (std::size_t i = 0; ok && i < a.samples.size(); ++i)
                ok = std::abs(a.samples[i].loss_db - b.samples[i].loss_db) <= 1e-9;
        }
    }
    report(2, "nine walk scenarios are mirror symmetric about the midpoint", ok);
}

void criterion_3() {
    const double loss = screen_loss_2edge(LinkGeometry{}, default_screen(2.5)).loss_db;
    report(3, "two-edge loss with the blocker at midpath is near 15.84 dB",
           std::abs(loss - 15.84) <= 0.05);
}

void criterion_4() {
    const LinkGeometry link;
    const ScreenBlocker near_screen = default_screen(0.5);
    const AntennaPattern horn = AntennaPattern::sinc_cos_deg(15.0);
    const double two_edge = screen_loss_2edge(link, near_screen).loss_db;
    const double modified = modified_screen_loss(link, near_screen, horn, horn).loss_db;
    const bool ok = std::abs(modified - 40.2) <= 0.5 && std::abs(two_edge - 20.08) <= 0.2 &&
                    modified - two_edge >= 19.5;
    report(4, "directional model deepens the near-TX shadow past 40 dB", ok);
}

void criterion_5() {
    const AntennaPattern horn = AntennaPattern::sinc_cos_deg(15.0);
    const double loss =
        modified_screen_loss(LinkGeometry{}, default_screen(1.0), horn, horn).loss_db;
    report(5, "directional loss one meter from TX is near 21.3 dB", std::abs(loss - 21.3) <= 0.5);
}

void criterion_6() {
    ScreenBlocker half_plane;
    half_plane.width_m = 1000.0;
    half_plane.lateral_offset_m = 500.0;
    const double loss = screen_loss_2edge(LinkGeometry{}, half_plane).loss_db;
    report(6, "grazing half-plane edge recovers the classical 6.02 dB",
           std::abs(loss - 20.0 * std::log10(2.0)) <= 0.05);
}

void criterion_7() {
    const AntennaPattern horn = AntennaPattern::sinc_cos_deg(15.0);
    const double half_power = horn.normalized_gain(7.5 * std::numbers::pi / 180.0);
    const bool ok = std::abs(half_power - 0.5) <= 1e-9 &&
                    std::abs(horn.coefficient_a() - 10.5377) <= 1e-3;
    report(7, "pattern calibration puts the half-power point at half the beamwidth", ok);
}

void criterion_8() {
    bool ok = true;
    for (Model model : {Model::ModifiedDirectional, Model::Metis2Edge}) {
        for (const WalkScenario& sc : nine_measurement_presets(model)) {
            const EventStats stats = event_stats(simulate_walk(sc), 3.0);
            ok = ok && !stats.no_event;
            ok = ok && stats.duration_s >= 0.200 && stats.duration_s <= 0.350;
            ok = ok && std::abs(stats.blocked_window_s - 0.28) <= 1e-12;
        }
    }
    const WalkScenario deep = nine_measurement_presets(Model::ModifiedDirectional).front();
    const EventStats six_db = event_stats(simulate_walk(deep), 6.0);
    ok = ok && six_db.duration_s >= 0.240 && six_db.duration_s <= 0.290;
    ok = ok && std::abs(six_db.duration_s - 0.2796646470) <= 0.002;
    report(8, "shadow durations land in the measured 0.2 to 0.35 s band", ok);
}

void criterion_9(const std::vector<RandomCase>& cases) {
    const AntennaPattern horn = AntennaPattern::sinc_cos_deg(15.0);
    const AntennaPattern iso = AntennaPattern::isotropic();
    bool ok = true;
    for (const RandomCase& c : cases) {
        const BlockageLoss results[] = {
            screen_loss_2edge(c.link, c.screen),
            modified_screen_loss(c.link, c.screen, horn, horn),
            modified_screen_loss(c.link, c.screen, iso, iso),
        };
        for (const BlockageLoss& r : results) {
            ok = ok && r.loss_db >= 0.0 && r.loss_db <= 200.0;
            ok = ok && r.log_argument > 0.0 && r.log_argument <= 1.0 + 1e-12;
            ok = ok && !r.log_arg_clamped;
        }
    }
    report(9, "losses stay finite and log arguments stay in (0, 1]", ok);
}

void criterion_10() {
    const fs::path dir =
        fs::temp_directory_path() / ("dked_acceptance_" + std::to_string(getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path config = dir / "config.json";
    {
        std::ofstream out(config);
        out << "{}\n";
    }
    const fs::path out_a = dir / "a.csv";
    const fs::path out_b = dir / "b.csv";
    const std::string base = std::string(DKED_CLI_PATH) + " simulate --config \"" +
                             config.string() + "\" --out \"";
    bool ok = run_command(base + out_a.string() + "\" >/dev/null 2>&1");
    ok = ok && run_command(base + out_b.string() + "\" >/dev/null 2>&1");
    const std::string text = read_file(out_a);
    ok = ok && !text.empty() && text == read_file(out_b);
    ok = ok && text.rfind("time_s,offset_m,loss_db,rel_power_db\n", 0) == 0;
    long newlines = 0;
    for (char ch : text)
        newlines += ch == '\n';
    ok = ok && newlines == 1002;
    report(10, "command line trace generation is deterministic", ok);
    fs::remove_all(dir);
}

void criterion_11() {
    const LinkGeometry link;
    ScreenBlocker person = default_screen(2.5);
    person.height = HeightSpan{0.0, 1.8};
    const double person_loss = screen_loss_4edge(link, person).loss_db;

    ScreenBlocker tall = default_screen(2.5);
    tall.height = HeightSpan{-1000.0, 1000.0};
    const double tall_loss = screen_loss_4edge(link, tall).loss_db;
    const double two_edge = screen_loss_2edge(link, default_screen(2.5)).loss_db;

    const bool ok =
        std::abs(person_loss - 14.30) <= 0.05 && std::abs(tall_loss - two_edge) <= 0.05;
    report(11, "four-edge model handles finite and effectively infinite screens", ok);
}

}  // namespace

int main() {
    const std::vector<RandomCase> cases = random_cases(1000);
    criterion_1(cases);
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(cases);
    criterion_10();
    criterion_11();
    if (failures == 0)
        std::printf("all 11 criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
