// SPDX-License-Identifier: Apache-2.0

#include "dked/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dked {

namespace {

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void validate_link(const LinkGeometry& link) {
    if (!finite_positive(link.separation_m))
        throw std::invalid_argument("separation_m must be a positive finite number");
    if (!finite_positive(link.carrier_hz))
        throw std::invalid_argument("carrier_hz must be a positive finite number");
    if (!std::isfinite(link.tx_height_m) || link.tx_height_m < 0.0)
        throw std::invalid_argument("tx_height_m must be finite and >= 0");
    if (!std::isfinite(link.rx_height_m) || link.rx_height_m < 0.0)
        throw std::invalid_argument("rx_height_m must be finite and >= 0");
}

void validate_screen(const ScreenBlocker& screen, const LinkGeometry& link) {
    if (!finite_positive(screen.width_m))
        throw std::invalid_argument("screen width_m must be a positive finite number");
    if (!std::isfinite(screen.lateral_offset_m))
        throw std::invalid_argument("screen lateral_offset_m must be finite");
    if (!std::isfinite(screen.distance_from_tx_m) || screen.distance_from_tx_m <= 0.0 ||
        screen.distance_from_tx_m >= link.separation_m)
        throw std::invalid_argument("screen distance_from_tx_m must lie strictly between TX and RX");
    if (screen.height) {
        if (!std::isfinite(screen.height->bottom_m) || !std::isfinite(screen.height->top_m))
            throw std::invalid_argument("screen height span must be finite");
        if (!(screen.height->top_m > screen.height->bottom_m))
            throw std::invalid_argument("screen height top_m must exceed bottom_m");
    }
}

EdgeDiffraction edge_projection(double d_tx_m, double d_rx_m, double offset_m) {
    if (!finite_positive(d_tx_m) || !finite_positive(d_rx_m))
        throw std::invalid_argument("edge projection needs positive distances to TX and RX");
    if (!std::isfinite(offset_m))
        throw std::invalid_argument("edge offset must be finite");

    EdgeDiffraction edge;
    edge.d2_m = std::hypot(d_tx_m, offset_m);
    edge.d1_m = std::hypot(d_rx_m, offset_m);
    edge.excess_m = std::max(0.0, edge.d2_m + edge.d1_m - (d_tx_m + d_rx_m));
    edge.angle_tx_rad = std::atan(offset_m / d_tx_m);
    edge.angle_rx_rad = std::atan(offset_m / d_rx_m);
    return edge;
}

EdgeClassification classify_edges(double offset_lo, double offset_hi) {
    if (!std::isfinite(offset_lo) || !std::isfinite(offset_hi) || !(offset_lo < offset_hi))
        throw std::invalid_argument("edge offsets must be finite with lo < hi");

    EdgeClassification cls;
    if (offset_lo <= 0.0 && offset_hi >= 0.0) {
        cls.blocked = true;
    } else if (std::abs(offset_lo) < std::abs(offset_hi)) {
        cls.sign_lo = -1;
    } else {
        cls.sign_hi = -1;
    }
    return cls;
}

EdgeClassification classify_width_edges(const ScreenBlocker& screen) {
    if (!finite_positive(screen.width_m))
        throw std::invalid_argument("screen width_m must be a positive finite number");
    if (!std::isfinite(screen.lateral_offset_m))
        throw std::invalid_argument("screen lateral_offset_m must be finite");
    const double half = screen.width_m / 2.0;
    return classify_edges(screen.lateral_offset_m - half, screen.lateral_offset_m + half);
}

EdgeClassification classify_height_edges(const ScreenBlocker& screen, const LinkGeometry& link) {
    validate_link(link);
    validate_screen(screen, link);
    if (!screen.height)
        throw std::invalid_argument("height edges are undefined for a screen of infinite height");
    if (link.tx_height_m != link.rx_height_m)
        throw std::invalid_argument("height edge classification requires equal TX and RX heights");
    const double h = link.tx_height_m;
    return classify_edges(screen.height->bottom_m - h, screen.height->top_m - h);
}

}  // namespace dked
