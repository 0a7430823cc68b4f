// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace dked {

enum class PatternKind { Isotropic, SincCos };

// Azimuth power pattern normalized to unit boresight gain. The sinc_cos
// kind follows G(theta) = sinc^2(a sin theta) cos^2 theta with the
// unnormalized sinc(x) = sin(x)/x; the coefficient a is calibrated at
// construction so that G(hpbw/2) = 1/2.
class AntennaPattern {
  public:
    static AntennaPattern isotropic();
    static AntennaPattern sinc_cos(double hpbw_az_rad);
    static AntennaPattern sinc_cos_deg(double hpbw_az_deg);

    // Power gain relative to boresight. Directional kinds only accept
    // angles in [-pi/2, pi/2]; isotropic patterns return 1 for any angle.
    double normalized_gain(double theta_rad) const;

    PatternKind kind() const { return kind_; }
    double hpbw_az_rad() const { return hpbw_az_rad_; }
    double hpbw_az_deg() const { return hpbw_az_deg_; }
    double coefficient_a() const { return coefficient_a_; }

  private:
    AntennaPattern(PatternKind kind, double hpbw_rad, double hpbw_deg, double a)
        : kind_(kind), hpbw_az_rad_(hpbw_rad), hpbw_az_deg_(hpbw_deg), coefficient_a_(a) {}

    PatternKind kind_ = PatternKind::Isotropic;
    double hpbw_az_rad_ = 0.0;
    double hpbw_az_deg_ = 0.0;
    double coefficient_a_ = 0.0;
};

// Smallest a > 0 with sinc^2(a sin(hpbw/2)) cos^2(hpbw/2) = 1/2, found by
// bisection on x = a sin(hpbw/2) over (0, pi) to an absolute tolerance of
// 1e-12. Beamwidths of 90 degrees or more leave cos^2(hpbw/2) <= 1/2, so
// no main-lobe solution exists and they are rejected.
double solve_pattern_coefficient(double hpbw_az_rad);

}  // namespace dked
