// SPDX-License-Identifier: Apache-2.0

#include "dked/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dked {

namespace {

struct EdgePair {
    EdgeDiffraction lo;
    EdgeDiffraction hi;
    bool blocked = false;
};

EdgePair project_edge_pair(double d_tx, double d_rx, double wavelength_m,
                           double offset_lo, double offset_hi) {
    const EdgeClassification cls = classify_edges(offset_lo, offset_hi);
    EdgePair pair;
    pair.lo = edge_projection(d_tx, d_rx, offset_lo);
    pair.hi = edge_projection(d_tx, d_rx, offset_hi);
    pair.lo.sign = cls.sign_lo;
    pair.hi.sign = cls.sign_hi;
    pair.lo.f_value = knife_edge_f(pair.lo.excess_m, wavelength_m, pair.lo.sign);
    pair.hi.f_value = knife_edge_f(pair.hi.excess_m, wavelength_m, pair.hi.sign);
    pair.blocked = cls.blocked;
    return pair;
}

EdgePair width_edge_pair(const LinkGeometry& link, const ScreenBlocker& screen) {
    const double half = screen.width_m / 2.0;
    return project_edge_pair(screen.distance_from_tx_m,
                             link.separation_m - screen.distance_from_tx_m,
                             link.wavelength_m(),
                             screen.lateral_offset_m - half,
                             screen.lateral_offset_m + half);
}

EdgePair height_edge_pair(const LinkGeometry& link, const ScreenBlocker& screen) {
    const double h = link.tx_height_m;
    return project_edge_pair(screen.distance_from_tx_m,
                             link.separation_m - screen.distance_from_tx_m,
                             link.wavelength_m(),
                             screen.height->bottom_m - h,
                             screen.height->top_m - h);
}

BlockageLoss finish(Model model, double log_argument, bool blocked,
                    std::vector<EdgeDiffraction> per_edge) {
    BlockageLoss out;
    out.model = model;
    out.boresight_blocked = blocked;
    out.per_edge = std::move(per_edge);
    out.log_argument = log_argument;
    out.log_arg_clamped = log_argument <= 0.0;
    const double arg = out.log_arg_clamped ? log_arg_floor : log_argument;
    out.loss_db = std::clamp(-20.0 * std::log10(arg), 0.0, loss_cap_db);
    return out;
}

}  // namespace

double knife_edge_f(double excess_m, double wavelength_m, int sign) {
    if (!std::isfinite(excess_m) || excess_m < 0.0)
        throw std::invalid_argument("excess path must be finite and >= 0");
    if (!std::isfinite(wavelength_m) || wavelength_m <= 0.0)
        throw std::invalid_argument("wavelength must be a positive finite number");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("knife edge sign must be +1 or -1");
    constexpr double pi = std::numbers::pi;
    const double root = std::sqrt(pi * excess_m / wavelength_m);
    return std::atan(sign * (pi / 2.0) * root) / pi;
}

BlockageLoss screen_loss_2edge(const LinkGeometry& link, const ScreenBlocker& screen) {
    validate_link(link);
    validate_screen(screen, link);
    const EdgePair w = width_edge_pair(link, screen);
    const double arg = 1.0 - (w.lo.f_value + w.hi.f_value);
    return finish(Model::Metis2Edge, arg, w.blocked, {w.lo, w.hi});
}

BlockageLoss screen_loss_4edge(const LinkGeometry& link, const ScreenBlocker& screen) {
    validate_link(link);
    validate_screen(screen, link);
    if (!screen.height)
        throw std::invalid_argument("the four-edge model needs a finite screen height");
    if (link.tx_height_m != link.rx_height_m)
        throw std::invalid_argument("the four-edge model requires equal TX and RX heights");
    const EdgePair w = width_edge_pair(link, screen);
    const EdgePair h = height_edge_pair(link, screen);
    const double arg =
        1.0 - (h.lo.f_value + h.hi.f_value) * (w.lo.f_value + w.hi.f_value);
    return finish(Model::Metis4Edge, arg, w.blocked && h.blocked, {w.lo, w.hi, h.hi, h.lo});
}

GainWeights edge_gain_weights(const LinkGeometry& link, const ScreenBlocker& screen,
                              const AntennaPattern& tx_pattern,
                              const AntennaPattern& rx_pattern) {
    validate_link(link);
    validate_screen(screen, link);
    const EdgePair w = width_edge_pair(link, screen);
    GainWeights gains;
    if (!w.blocked) return gains;
    gains.g_d2_w1 = tx_pattern.normalized_gain(w.lo.angle_tx_rad);
    gains.g_d1_w1 = rx_pattern.normalized_gain(w.lo.angle_rx_rad);
    gains.g_d2_w2 = tx_pattern.normalized_gain(w.hi.angle_tx_rad);
    gains.g_d1_w2 = rx_pattern.normalized_gain(w.hi.angle_rx_rad);
    return gains;
}

BlockageLoss modified_screen_loss(const LinkGeometry& link, const ScreenBlocker& screen,
                                  const AntennaPattern& tx_pattern,
                                  const AntennaPattern& rx_pattern) {
    validate_link(link);
    validate_screen(screen, link);
    const EdgePair w = width_edge_pair(link, screen);
    GainWeights g;
    if (w.blocked) {
        g.g_d2_w1 = tx_pattern.normalized_gain(w.lo.angle_tx_rad);
        g.g_d1_w1 = rx_pattern.normalized_gain(w.lo.angle_rx_rad);
        g.g_d2_w2 = tx_pattern.normalized_gain(w.hi.angle_tx_rad);
        g.g_d1_w2 = rx_pattern.normalized_gain(w.hi.angle_rx_rad);
    }
    // One sqrt of the gain product keeps the result bit-identical when TX
    // and RX trade places.
    const double term_w1 = (0.5 - w.lo.f_value) * std::sqrt(g.g_d2_w1 * g.g_d1_w1);
    const double term_w2 = (0.5 - w.hi.f_value) * std::sqrt(g.g_d2_w2 * g.g_d1_w2);
    const double arg = std::abs(term_w1 + term_w2);
    return finish(Model::ModifiedDirectional, arg, w.blocked, {w.lo, w.hi});
}

double multi_screen_loss(const std::vector<BlockageLoss>& screens) {
    double total = 0.0;
    for (const BlockageLoss& screen : screens) total += screen.loss_db;
    return total;
}

BlockageLoss evaluate_screen_loss(Model model, const LinkGeometry& link,
                                  const ScreenBlocker& screen,
                                  const AntennaPattern& tx_pattern,
                                  const AntennaPattern& rx_pattern) {
    switch (model) {
        case Model::Metis2Edge:
            return screen_loss_2edge(link, screen);
        case Model::Metis4Edge:
            return screen_loss_4edge(link, screen);
        case Model::ModifiedDirectional:
            return modified_screen_loss(link, screen, tx_pattern, rx_pattern);
    }
    throw std::invalid_argument("unknown loss model");
}

}  // namespace dked
