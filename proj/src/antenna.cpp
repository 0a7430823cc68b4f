// SPDX-License-Identifier: Apache-2.0

#include "dked/antenna.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dked {

namespace {

double unnormalized_sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

double solve_pattern_coefficient(double hpbw_az_rad) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!std::isfinite(hpbw_az_rad) || hpbw_az_rad <= 0.0 || hpbw_az_rad >= half_pi)
        throw std::invalid_argument(
            "sinc_cos calibration needs a beamwidth in (0, 90) degrees");

    const double half = hpbw_az_rad / 2.0;
    const double target = 1.0 / (std::sqrt(2.0) * std::cos(half));
    // sinc decreases from 1 to 0 on (0, pi) and target lies in (1/sqrt(2), 1),
    // so the root is bracketed from the start.
    double lo = 0.0;
    double hi = std::numbers::pi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (unnormalized_sinc(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi) / std::sin(half);
}

AntennaPattern AntennaPattern::isotropic() {
    return AntennaPattern(PatternKind::Isotropic, 0.0, 0.0, 0.0);
}

AntennaPattern AntennaPattern::sinc_cos(double hpbw_az_rad) {
    const double a = solve_pattern_coefficient(hpbw_az_rad);
    return AntennaPattern(PatternKind::SincCos, hpbw_az_rad,
                          hpbw_az_rad * 180.0 / std::numbers::pi, a);
}

AntennaPattern AntennaPattern::sinc_cos_deg(double hpbw_az_deg) {
    const double rad = hpbw_az_deg * std::numbers::pi / 180.0;
    const double a = solve_pattern_coefficient(rad);
    return AntennaPattern(PatternKind::SincCos, rad, hpbw_az_deg, a);
}

double AntennaPattern::normalized_gain(double theta_rad) const {
    if (kind_ == PatternKind::Isotropic) return 1.0;
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(std::abs(theta_rad) <= half_pi))
        throw std::domain_error("pattern angle must lie in [-pi/2, pi/2]");
    const double s = unnormalized_sinc(coefficient_a_ * std::sin(theta_rad));
    const double c = std::cos(theta_rad);
    return s * s * c * c;
}

}  // namespace dked
