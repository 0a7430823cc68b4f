// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

namespace dked {

inline constexpr double speed_of_light_mps = 299792458.0;

// Point-to-point radio link. TX and RX face each other at separation_m
// along the boresight axis; heights are measured from the ground plane.
struct LinkGeometry {
    double separation_m = 5.0;
    double tx_height_m = 1.4;
    double rx_height_m = 1.4;
    double carrier_hz = 73.5e9;

    double wavelength_m() const { return speed_of_light_mps / carrier_hz; }
};

// Vertical extent of a finite screen, from the ground plane upward.
struct HeightSpan {
    double bottom_m = 0.0;
    double top_m = 1.8;
};

// Rectangular absorbing screen perpendicular to the link axis, standing in
// for a blocker. A missing height span models an infinitely tall screen.
struct ScreenBlocker {
    double distance_from_tx_m = 2.5;
    double lateral_offset_m = 0.0;
    double width_m = 0.28;
    std::optional<HeightSpan> height;
};

// One knife edge of a screen, projected onto the plane spanned by the
// link axis and the edge offset direction.
struct EdgeDiffraction {
    double d2_m = 0.0;          // TX to edge
    double d1_m = 0.0;          // edge to RX
    double excess_m = 0.0;      // d2 + d1 - r, never negative
    int sign = 1;               // +1 when the edge shadows the direct ray
    double angle_tx_rad = 0.0;  // edge direction off boresight, seen from TX
    double angle_rx_rad = 0.0;  // edge direction off boresight, seen from RX
    double f_value = 0.0;       // knife-edge diffraction term
};

// Shadow state of the two edges bounding one screen dimension.
struct EdgeClassification {
    int sign_lo = 1;
    int sign_hi = 1;
    bool blocked = false;
};

void validate_link(const LinkGeometry& link);
void validate_screen(const ScreenBlocker& screen, const LinkGeometry& link);

// Distances, excess path and view angles for an edge offset_m away from the
// direct ray, with the screen d_tx_m from the TX and d_rx_m from the RX.
// sign and f_value of the result are left at their defaults; callers fill
// them once the edge pair has been classified.
EdgeDiffraction edge_projection(double d_tx_m, double d_rx_m, double offset_m);

// Sign rule for an edge pair at offsets lo < hi. The direct ray sits at
// offset zero and counts as blocked whenever zero lies in the closed
// interval [lo, hi]; both edges then get +1. Otherwise the edge nearer the
// ray gets -1 and the farther one +1.
EdgeClassification classify_edges(double offset_lo, double offset_hi);

EdgeClassification classify_width_edges(const ScreenBlocker& screen);

// The same rule applied in the vertical plane. Needs a finite screen and
// equal TX/RX heights so the side view reduces to the same 2-D picture.
EdgeClassification classify_height_edges(const ScreenBlocker& screen,
                                         const LinkGeometry& link);

}  // namespace dked
