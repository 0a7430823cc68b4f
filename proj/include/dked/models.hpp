// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "dked/antenna.hpp"
#include "dked/geometry.hpp"

namespace dked {

enum class Model { Metis2Edge, Metis4Edge, ModifiedDirectional };

// Losses are clamped to [0, loss_cap_db]. A log argument at or below zero
// is floored to log_arg_floor and the result flagged, so callers can spot
// degenerate samples instead of seeing infinities.
inline constexpr double loss_cap_db = 200.0;
inline constexpr double log_arg_floor = 1e-10;

// Normalized linear gains seen along the four diffracted legs of the two
// width edges (TX side d2, RX side d1). All four stay at 1 whenever the
// direct ray is not blocked, and for isotropic antennas.
struct GainWeights {
    double g_d2_w1 = 1.0;
    double g_d1_w1 = 1.0;
    double g_d2_w2 = 1.0;
    double g_d1_w2 = 1.0;
};

struct BlockageLoss {
    double loss_db = 0.0;
    Model model = Model::Metis2Edge;
    bool boresight_blocked = false;
    // Width edges first (w1 at the lower offset, w2 at the higher); the
    // four-edge model appends the top and then the bottom height edge.
    std::vector<EdgeDiffraction> per_edge;
    double log_argument = 1.0;    // value handed to the log, before clamping
    bool log_arg_clamped = false;
};

// Knife-edge term F = atan(sign (pi/2) sqrt(pi excess / lambda)) / pi,
// confined to (-1/2, 1/2) and zero for a grazing edge.
double knife_edge_f(double excess_m, double wavelength_m, int sign);

// L = -20 log10(1 - (F_w1 + F_w2)) for an infinitely tall screen.
BlockageLoss screen_loss_2edge(const LinkGeometry& link, const ScreenBlocker& screen);

// L = -20 log10(1 - (F_h1 + F_h2)(F_w1 + F_w2)) for a finite screen on an
// equal-height link.
BlockageLoss screen_loss_4edge(const LinkGeometry& link, const ScreenBlocker& screen);

GainWeights edge_gain_weights(const LinkGeometry& link, const ScreenBlocker& screen,
                              const AntennaPattern& tx_pattern,
                              const AntennaPattern& rx_pattern);

// L = -20 log10 |(1/2 - F_w1) sqrt(G_d2_w1 G_d1_w1)
//              + (1/2 - F_w2) sqrt(G_d2_w2 G_d1_w2)|
// with the gain weights applied only while the direct ray is blocked.
BlockageLoss modified_screen_loss(const LinkGeometry& link, const ScreenBlocker& screen,
                                  const AntennaPattern& tx_pattern,
                                  const AntennaPattern& rx_pattern);

// Aggregate loss of independent screens: per-screen dB values add.
double multi_screen_loss(const std::vector<BlockageLoss>& screens);

BlockageLoss evaluate_screen_loss(Model model, const LinkGeometry& link,
                                  const ScreenBlocker& screen,
                                  const AntennaPattern& tx_pattern,
                                  const AntennaPattern& rx_pattern);

}  // namespace dked
