// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dked/antenna.hpp"

using namespace dked;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

double deg(double d) { return d * pi / 180.0; }

// Independent bisection on sinc(x) = 1 / (sqrt(2) cos(hpbw/2)).
double reference_coefficient(double hpbw_rad) {
    const double target = 1.0 / (std::sqrt(2.0) * std::cos(hpbw_rad / 2.0));
    double lo = 1e-9, hi = pi - 1e-9;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::sin(mid) / mid > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi) / std::sin(hpbw_rad / 2.0);
}

}  // namespace

TEST_CASE("calibration hits the canonical 15 degree beam") {
    AntennaPattern p = AntennaPattern::sinc_cos(deg(15.0));
    CHECK(p.kind() == PatternKind::SincCos);
    CHECK(p.coefficient_a() == Approx(10.5377028382).epsilon(1e-9));
    CHECK(p.coefficient_a() == Approx(reference_coefficient(deg(15.0))).epsilon(1e-10));
    CHECK(p.normalized_gain(deg(7.5)) == Approx(0.5).epsilon(1e-9));
    CHECK(p.normalized_gain(0.0) == 1.0);
    CHECK(p.hpbw_az_rad() == deg(15.0));
}

TEST_CASE("the solver agrees with the reference bisection across beamwidths") {
    for (double d : {2.0, 5.0, 10.0, 25.0, 45.0, 60.0, 80.0})
        CHECK(solve_pattern_coefficient(deg(d)) ==
              Approx(reference_coefficient(deg(d))).epsilon(1e-9));
}

TEST_CASE("gain at the shadow edge of the nearest crossing") {
    AntennaPattern p = AntennaPattern::sinc_cos(deg(15.0));
    // Screen edge 0.14 m off axis, seen from 0.5 m away.
    CHECK(p.normalized_gain(std::atan(0.14 / 0.5)) == Approx(0.01005179762).epsilon(1e-8));
}

TEST_CASE("the first sinc null sits past the main lobe") {
    AntennaPattern p = AntennaPattern::sinc_cos(deg(15.0));
    const double theta_null = std::asin(pi / p.coefficient_a());
    CHECK(theta_null * 180.0 / pi == Approx(17.34524885).epsilon(1e-8));
    CHECK(p.normalized_gain(theta_null) < 1e-20);
}

TEST_CASE("gain stays within [0, 1] and is even") {
    AntennaPattern p = AntennaPattern::sinc_cos(deg(15.0));
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> angle(0.0, pi / 2.0);
    for (int i = 0; i < 2000; ++i) {
        const double t = angle(rng);
        const double g = p.normalized_gain(t);
        CHECK(g >= 0.0);
        CHECK(g <= 1.0);
        CHECK(p.normalized_gain(-t) == g);
    }
}

TEST_CASE("gain decreases monotonically out to the first null") {
    AntennaPattern p = AntennaPattern::sinc_cos(deg(15.0));
    const double theta_null = std::asin(pi / p.coefficient_a());
    double prev = p.normalized_gain(0.0);
    for (int i = 1; i <= 2000; ++i) {
        const double g = p.normalized_gain(theta_null * i / 2000.0);
        CHECK(g <= prev + 1e-12);
        prev = g;
    }
}

TEST_CASE("half-power calibration holds across beamwidths") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> bw(deg(1.0), deg(75.0));
    for (int i = 0; i < 300; ++i) {
        const double hpbw = bw(rng);
        AntennaPattern p = AntennaPattern::sinc_cos(hpbw);
        CHECK(p.normalized_gain(hpbw / 2.0) == Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("beamwidths without a half-power solution are rejected") {
    CHECK_THROWS_AS(AntennaPattern::sinc_cos(deg(120.0)), std::invalid_argument);
    CHECK_THROWS_AS(AntennaPattern::sinc_cos(deg(90.0)), std::invalid_argument);
    CHECK_THROWS_AS(AntennaPattern::sinc_cos(0.0), std::invalid_argument);
    CHECK_THROWS_AS(AntennaPattern::sinc_cos(-deg(10.0)), std::invalid_argument);
    CHECK_THROWS_AS(AntennaPattern::sinc_cos_deg(120.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_pattern_coefficient(std::nan("")), std::invalid_argument);
}

TEST_CASE("angles outside the forward half plane are rejected") {
    AntennaPattern p = AntennaPattern::sinc_cos(deg(15.0));
    CHECK_THROWS_AS(p.normalized_gain(pi / 2.0 + 1e-6), std::domain_error);
    CHECK_THROWS_AS(p.normalized_gain(-2.0), std::domain_error);
    CHECK_THROWS_AS(p.normalized_gain(std::nan("")), std::domain_error);
    CHECK_NOTHROW(p.normalized_gain(pi / 2.0));
    CHECK(p.normalized_gain(pi / 2.0) <= 1e-30);
}

TEST_CASE("isotropic patterns are flat") {
    AntennaPattern p = AntennaPattern::isotropic();
    CHECK(p.kind() == PatternKind::Isotropic);
    CHECK(p.normalized_gain(0.0) == 1.0);
    CHECK(p.normalized_gain(3.0) == 1.0);
    CHECK(p.normalized_gain(-1.2) == 1.0);
}

TEST_CASE("the degree factory preserves the configured beamwidth") {
    AntennaPattern p = AntennaPattern::sinc_cos_deg(15.0);
    CHECK(p.hpbw_az_deg() == 15.0);
    CHECK(p.hpbw_az_rad() == Approx(deg(15.0)).epsilon(1e-15));
    CHECK(p.coefficient_a() == Approx(10.5377028382).epsilon(1e-9));
}
